# File: orchestration/bench.py
"""Operation-count benchmark for the factorized adjoint"""
import time
from random import Random
from typing import List

from adjoint.factorization import adjoint
from config.settings import BenchConfig
from core.exceptions import ConfigurationError, SingularMatrix
from core.models import BenchRecord, BenchReport, OpCounter
from matrix.dense import ExactMatrix, next_power_of_two
from rings.base import Domain
from utils.logger import get_logger

logger = get_logger(__name__)

# nonsingular draws attempted per size before giving up
MAX_DRAWS = 20


def predicted_block_multiplications(n: int) -> int:
    """Closed summation over the recursion tree of a padded order-n matrix.

    Level k holds 2^k sub-problems, each doing six products of
    half-size blocks; orders 1 and 2 are closed-form leaves.
    """
    size = next_power_of_two(max(n, 1))
    p = size.bit_length() - 1
    return sum(6 * 2 ** k * (2 ** (p - k - 1)) ** 3 for k in range(p - 1))


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


class BenchRunner:
    """Runs the factorized adjoint on random matrices and tallies operations"""

    def __init__(self, domain: Domain, config: BenchConfig, rng: Random):
        self.domain = domain
        self.config = config
        self.rng = rng

    def random_matrix(self, n: int) -> ExactMatrix:
        bound = self.config.entry_bound
        entries = [self.domain.random_element(self.rng, bound) for _ in range(n * n)]
        return ExactMatrix(self.domain, n, n, entries)

    def measure(self, n: int) -> BenchRecord:
        for _ in range(MAX_DRAWS):
            a = self.random_matrix(n)
            counter = OpCounter()
            start = time.monotonic()
            try:
                adjoint(a, counter)
            except SingularMatrix:
                logger.debug(f"Random order-{n} matrix was singular, redrawing")
                continue
            seconds = time.monotonic() - start
            return BenchRecord(
                n=n,
                mults=counter.multiplications,
                divs=counter.exact_divisions,
                scalings=counter.scalings,
                predicted=predicted_block_multiplications(n),
                seconds=seconds,
            )
        raise SingularMatrix(f"no nonsingular order-{n} matrix in {MAX_DRAWS} draws")

    def run(self, sizes: List[int], seed) -> BenchReport:
        bad = [n for n in sizes if not is_power_of_two(n)]
        if bad and not self.config.allow_non_powers:
            raise ConfigurationError(f"bench sizes {bad} are not powers of two; pass --non-powers")

        records = []
        for n in sizes:
            record = self.measure(n)
            logger.info(f"n={n}: {record.mults} block multiplications, predicted {record.predicted}",
                        extra={'order': n, 'duration': record.seconds})
            records.append(record)
        return BenchReport(ring=self.domain.name, seed=seed, records=tuple(records))
