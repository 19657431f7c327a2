# File: orchestration/coordinator.py
"""Job dispatch for the command line commands"""
import random
import time
from dataclasses import replace
from typing import Any, Dict

from adjoint.factorization import adjoint
from config.settings import ConfigManager
from core.exceptions import InconsistentSystem, SingularMatrix
from core.models import (
    CommandType,
    DiophantineStatus,
    JobConfig,
    Method,
    OpCounter,
    SolveMode,
    SystemInstance,
)
from elimination.bareiss import determinant, rank
from orchestration.bench import BenchRunner
from rings.factory import create_domain
from solvers.diophantine import solve_diophantine
from solvers.rational_basis import compute_basis
from storage.matrix_io import (
    MatrixStore,
    dump_tree,
    format_diophantine_basis,
    format_rational_basis,
)
from utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


class JobCoordinator:
    """Runs one job and reports its text output and exit status"""

    def __init__(self, config_manager: ConfigManager):
        self.config_manager = config_manager

    def run(self, job: JobConfig) -> Dict[str, Any]:
        """Run a job; exceptions other than mathematical negatives propagate"""
        start_time = time.monotonic()
        domain = create_domain(job.ring)
        seed = self._resolve_seed(job)
        store = MatrixStore(domain, job.output_path)

        logger.info(f"Running {job.command.value} over {domain.name} (seed {seed})",
                    extra={'command': job.command.value, 'seed': seed})

        handlers = {
            CommandType.DET: self._run_det,
            CommandType.ADJ: self._run_adj,
            CommandType.RANK: self._run_rank,
            CommandType.SOLVE: self._run_solve,
            CommandType.BENCH: self._run_bench,
        }
        text, exit_code = handlers[job.command](job, store, random.Random(seed), seed)
        store.emit(text)

        duration = time.monotonic() - start_time
        logger.info(f"{job.command.value} finished with exit {exit_code} in {duration:.3f}s",
                    extra={'command': job.command.value, 'duration': duration})
        return {
            'command': job.command.value,
            'exit_code': exit_code,
            'output': text,
            'seed': seed,
            'duration': duration,
        }

    def _resolve_seed(self, job: JobConfig) -> int:
        if job.seed is not None:
            return job.seed
        configured = self.config_manager.get_seed()
        if configured is not None:
            return configured
        return random.SystemRandom().randrange(2 ** 64)

    def _run_det(self, job: JobConfig, store: MatrixStore, rng, seed):
        a = store.load_matrix(job.matrix_path)
        counter = OpCounter()
        if self.config_manager.get_solver_options(job.method).method is Method.ADJOINT:
            try:
                det = adjoint(a, counter).determinant
            except SingularMatrix:
                det = a.domain.zero
        else:
            det = determinant(a, counter)
        logger.debug(f"Determinant used {counter.to_dict()}")
        return f"{a.domain.format(det)}\n", EXIT_OK

    def _run_adj(self, job: JobConfig, store: MatrixStore, rng, seed):
        a = store.load_matrix(job.matrix_path)
        options = self.config_manager.get_solver_options()
        try:
            result = adjoint(a, OpCounter(), verify_frames=options.verify_frames)
        except SingularMatrix as e:
            logger.warning(f"Adjugate unavailable: {e}")
            return "SINGULAR\n", EXIT_NEGATIVE
        return store.render_matrix(result.adjugate), EXIT_OK

    def _run_rank(self, job: JobConfig, store: MatrixStore, rng, seed):
        a = store.load_matrix(job.matrix_path)
        return f"{rank(a)}\n", EXIT_OK

    def _run_solve(self, job: JobConfig, store: MatrixStore, rng, seed):
        system = SystemInstance(store.load_matrix(job.matrix_path), tuple(store.load_vector(job.rhs_path)))
        options = self.config_manager.get_solver_options(job.method)
        counter = OpCounter()

        try:
            if job.mode is SolveMode.RATIONAL:
                basis = compute_basis(system, options, rng, counter)
                logger.info(f"Rational basis of {len(basis)} vectors, rank {basis.rank}")
                return format_rational_basis(basis), EXIT_OK

            max_iters = job.max_iters or self.config_manager.get_diophantine_config().max_iters
            result = solve_diophantine(system, rng, max_iters, options, counter)
        except InconsistentSystem as e:
            logger.info(f"System is inconsistent: {e}")
            return "INCONSISTENT\n", EXIT_NEGATIVE

        if result.status is DiophantineStatus.SOLVED:
            return format_diophantine_basis(system.domain, result.basis), EXIT_OK
        if result.status is DiophantineStatus.NO_SOLUTION:
            return "NO_SOLUTION\n", EXIT_NEGATIVE
        return "INCONCLUSIVE\n", EXIT_NEGATIVE

    def _run_bench(self, job: JobConfig, store: MatrixStore, rng, seed):
        config = self.config_manager.get_bench_config()
        if job.non_powers:
            config = replace(config, allow_non_powers=True)
        sizes = job.sizes or config.sizes
        report = BenchRunner(store.domain, config, rng).run(sizes, seed)
        return dump_tree(report.to_dict()), EXIT_OK
