# File: config/settings.py
"""Configuration management and validation"""
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from core.exceptions import ConfigurationError
from core.models import Method, SolverOptions
from utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = "exactla.yaml"


@dataclass
class LiftingConfig:
    """p-adic lifting configuration"""
    prime_bits: int = 62
    max_primes: int = 8


@dataclass
class SolverConfig:
    """Determined-system backend configuration"""
    method: str = "auto"
    lifting_threshold: int = 8
    verify_frames: bool = False


@dataclass
class DiophantineConfig:
    """Randomized Diophantine loop configuration"""
    max_iters: Optional[int] = None


@dataclass
class BenchConfig:
    """Benchmark configuration"""
    sizes: List[int] = field(default_factory=lambda: [8, 16, 32, 64, 128])
    entry_bound: int = 9
    allow_non_powers: bool = False


# environment variable -> (section, key, converter)
ENV_OVERRIDES = {
    'EXACTLA_LOG_LEVEL': ('logging', 'level', str),
    'EXACTLA_LOG_FORMAT': ('logging', 'format', str),
    'EXACTLA_PRIME_BITS': ('lifting', 'prime_bits', int),
    'EXACTLA_MAX_PRIMES': ('lifting', 'max_primes', int),
    'EXACTLA_SEED': (None, 'seed', int),
}


class ConfigManager:
    """Configuration manager with validation.

    The default file is optional; a path given explicitly must exist.
    """

    def __init__(self, config_path: Optional[str] = None):
        self.explicit = config_path is not None
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self._config: Dict[str, Any] = {}
        self._validated = False

    def load_config(self) -> Dict[str, Any]:
        """Load, merge environment overrides and validate configuration"""
        try:
            if os.path.exists(self.config_path):
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    self._config = yaml.safe_load(f) or {}
            elif self.explicit:
                raise FileNotFoundError(self.config_path)
            else:
                self._config = {}

            if not isinstance(self._config, dict):
                raise ConfigurationError("Configuration root must be a mapping")

            load_dotenv()
            self._apply_environment()
            self._apply_defaults()
            self._validate_config()

            logger.debug(f"Configuration loaded from {self.config_path if self.explicit else 'defaults'}")
            return self._config

        except FileNotFoundError:
            raise ConfigurationError(f"Configuration file not found: {self.config_path}")
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in configuration file: {e}")
        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError(f"Error loading configuration: {e}")

    def _apply_environment(self):
        """Environment variables win over file values"""
        for name, (section, key, convert) in ENV_OVERRIDES.items():
            raw = os.getenv(name)
            if raw is None or raw == '':
                continue
            try:
                value = convert(raw)
            except ValueError:
                raise ConfigurationError(f"{name} has invalid value {raw!r}")
            if section is None:
                self._config[key] = value
            else:
                target = self._config.setdefault(section, {})
                if not isinstance(target, dict):
                    raise ConfigurationError(f"'{section}' must be a mapping")
                target[key] = value

    def _apply_defaults(self):
        """Apply default values for optional configuration"""
        defaults = {
            'seed': None,
            'lifting': {
                'prime_bits': 62,
                'max_primes': 8,
            },
            'solver': {
                'method': 'auto',
                'lifting_threshold': 8,
                'verify_frames': False,
            },
            'diophantine': {
                'max_iters': None,
            },
            'bench': {
                'sizes': [8, 16, 32, 64, 128],
                'entry_bound': 9,
                'allow_non_powers': False,
            },
            'logging': {
                'level': 'WARNING',
                'file_enabled': False,
                'file_path': 'exactla.log',
                'console_enabled': True,
                'format': 'standard'
            },
        }

        for key, value in defaults.items():
            if key not in self._config:
                self._config[key] = dict(value) if isinstance(value, dict) else value
            elif isinstance(value, dict) and isinstance(self._config[key], dict):
                # Merge nested dictionaries
                for subkey, subvalue in value.items():
                    if subkey not in self._config[key]:
                        self._config[key][subkey] = subvalue

    def _validate_config(self):
        """Validate configuration structure and values"""
        for section in ('lifting', 'solver', 'diophantine', 'bench', 'logging'):
            if not isinstance(self._config[section], dict):
                raise ConfigurationError(f"'{section}' must be a mapping")

        lifting = self._config['lifting']
        if not isinstance(lifting['prime_bits'], int) or lifting['prime_bits'] < 2:
            raise ConfigurationError("lifting.prime_bits must be an integer >= 2")
        if not isinstance(lifting['max_primes'], int) or lifting['max_primes'] < 1:
            raise ConfigurationError("lifting.max_primes must be a positive integer")

        solver = self._config['solver']
        methods = [m.value for m in Method]
        if solver['method'] not in methods:
            raise ConfigurationError(f"solver.method must be one of {methods}")
        if not isinstance(solver['lifting_threshold'], int) or solver['lifting_threshold'] < 0:
            raise ConfigurationError("solver.lifting_threshold must be a non-negative integer")

        max_iters = self._config['diophantine']['max_iters']
        if max_iters is not None and (not isinstance(max_iters, int) or max_iters < 1):
            raise ConfigurationError("diophantine.max_iters must be a positive integer")

        sizes = self._config['bench']['sizes']
        if not isinstance(sizes, list) or not sizes:
            raise ConfigurationError("bench.sizes must be a non-empty list")
        if any(not isinstance(n, int) or n < 1 for n in sizes):
            raise ConfigurationError("bench.sizes must hold positive integers")

        seed = self._config['seed']
        if seed is not None and not isinstance(seed, int):
            raise ConfigurationError("seed must be an integer")

        self._validated = True
        logger.debug("Configuration validation passed")

    def _require_validated(self):
        if not self._validated:
            raise ConfigurationError("Configuration not validated")

    def get_lifting_config(self) -> LiftingConfig:
        """Get lifting configuration"""
        self._require_validated()
        section = self._config['lifting']
        return LiftingConfig(prime_bits=section['prime_bits'], max_primes=section['max_primes'])

    def get_solver_config(self) -> SolverConfig:
        """Get solver configuration"""
        self._require_validated()
        section = self._config['solver']
        return SolverConfig(
            method=section['method'],
            lifting_threshold=section['lifting_threshold'],
            verify_frames=bool(section['verify_frames'])
        )

    def get_diophantine_config(self) -> DiophantineConfig:
        self._require_validated()
        return DiophantineConfig(max_iters=self._config['diophantine']['max_iters'])

    def get_bench_config(self) -> BenchConfig:
        """Get benchmark configuration"""
        self._require_validated()
        section = self._config['bench']
        return BenchConfig(
            sizes=list(section['sizes']),
            entry_bound=section['entry_bound'],
            allow_non_powers=bool(section['allow_non_powers'])
        )

    def get_logging_config(self) -> Dict[str, Any]:
        self._require_validated()
        return dict(self._config['logging'])

    def get_seed(self) -> Optional[int]:
        self._require_validated()
        return self._config['seed']

    def get_solver_options(self, method: Optional[Method] = None) -> SolverOptions:
        """Solver options merged from the solver and lifting sections"""
        solver = self.get_solver_config()
        lifting = self.get_lifting_config()
        return SolverOptions(
            method=method or Method(solver.method),
            lifting_threshold=solver.lifting_threshold,
            prime_bits=lifting.prime_bits,
            max_primes=lifting.max_primes,
            verify_frames=solver.verify_frames,
        )
