import concurrent.futures
import os
from typing import List, Optional, Sequence

from src.core.exceptions import ChordToolkitException
from src.core.logging import get_logger

from .checks.base import BaseCheck
from .context import Certificate, VerificationContext

logger = get_logger("pipeline.orchestrator")


def _batches(cases: Sequence[object], size: int) -> List[List[object]]:
    return [list(cases[i:i + size]) for i in range(0, len(cases), size)]


class VerificationRunner:
    """Run the cases of a check one after another or across worker processes."""

    def __init__(self, max_workers: Optional[int] = None, parallel: bool = False, chunk_size: int = 32) -> None:
        self._max_workers = max_workers
        self._parallel = parallel
        self._chunk_size = max(1, chunk_size)

    def run(self, check: BaseCheck) -> VerificationContext:
        context = VerificationContext(check=check.name)
        try:
            check.prepare()
            cases = check.cases()
        except ChordToolkitException as exc:
            context.add_error(check.name, str(exc))
            return context
        context.parameters = dict(check.parameters)
        logger.info("running check", extra={"context": {"check": check.name, "cases": len(cases)}})

        if self._parallel and (self._max_workers or 0) > 1 and len(cases) > 1:
            self._run_parallel(check, cases, context)
        else:
            self._run_sequential(check, cases, context)

        context.sort_certificates()
        logger.info(
            "check finished",
            extra={
                "context": {
                    "check": check.name,
                    "cases": len(context.certificates),
                    "failures": len(context.failures),
                    "errors": len(context.errors),
                }
            },
        )
        return context

    def _run_sequential(self, check: BaseCheck, cases: Sequence[object], context: VerificationContext) -> None:
        for batch in _batches(cases, self._chunk_size):
            try:
                certificates = check.run_batch(batch)
            except Exception as exc:
                context.add_error(check.name, str(exc))
                continue
            for certificate in certificates:
                context.add_certificate(certificate)

    def _run_parallel(self, check: BaseCheck, cases: Sequence[object], context: VerificationContext) -> None:
        with concurrent.futures.ProcessPoolExecutor(max_workers=self._max_workers, initializer=_worker_init) as executor:
            futures = {executor.submit(check.run_batch, batch): i for i, batch in enumerate(_batches(cases, self._chunk_size))}
            for future in concurrent.futures.as_completed(futures):
                try:
                    certificates: List[Certificate] = future.result()
                except Exception as exc:
                    context.add_error("worker", f"batch {futures[future]} failed: {exc}")
                    continue
                for certificate in certificates:
                    context.add_certificate(certificate)


def _worker_init() -> None:
    """Keep numeric libraries single-threaded inside worker processes."""
    for name in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ[name] = "1"
