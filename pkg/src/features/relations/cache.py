"""On-disk cache of relation bases, one JSON document per key."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from filelock import FileLock, Timeout

from src.core.exceptions import BasisCacheException
from src.core.logging import get_logger
from src.core.utils import atomic_write_json, ensure_directory, retry_on_exception
from src.features.diagrams import enumerate_diagrams

from .basis import RelationBasis, check_degree_gate, relation_basis
from .config import RelationConfig
from .elimination import Echelon, modular_rank
from .generators import generate_relations
from .model import RelationSet, Ring, format_coefficient

logger = get_logger("relations.cache")

# bump when generator output or the row format changes
GENERATOR_VERSION = 1
SAMPLE_SIZE = 64


def _parse_coefficient(value) -> object:
    if isinstance(value, int):
        return value
    parsed = Fraction(value)
    return parsed.numerator if parsed.denominator == 1 else parsed


class BasisCache:
    """Advisory cache: every load is revalidated against a sample of generated relations."""

    def __init__(self, cache_dir: str, lock_timeout: float = 10.0) -> None:
        self._cache_dir = Path(cache_dir).resolve()
        self._lock_timeout = lock_timeout

    def path_for(self, degree: int, strand_count: int, relations: RelationSet, ring: Ring, sign: str) -> Path:
        name = f"basis_n{degree}_k{strand_count}_{relations.key}_{ring.value}_{sign}_v{GENERATOR_VERSION}.json"
        return self._cache_dir / name

    def _lock(self, path: Path) -> FileLock:
        return FileLock(f"{path}.lock", timeout=self._lock_timeout)

    def get_or_build(
        self,
        degree: int,
        strand_count: int,
        relations: RelationSet,
        ring: Ring = Ring.RATIONAL,
        config: Optional[RelationConfig] = None,
    ) -> RelationBasis:
        config = config or RelationConfig()
        check_degree_gate(degree, strand_count, config)
        path = self.path_for(degree, strand_count, relations, ring, config.antisymmetry_sign)
        cached = self.load(path, degree, strand_count, relations, ring, config)
        if cached is not None:
            logger.info("basis cache hit", extra={"context": {"path": str(path)}})
            return cached
        logger.info("basis cache miss", extra={"context": {"path": str(path)}})
        basis = relation_basis(degree, strand_count, relations, ring, config)
        try:
            self.save(path, basis)
        except BasisCacheException as exc:
            logger.warning("basis cache not written", extra={"context": {"path": str(path), "error": str(exc)}})
        return basis

    @retry_on_exception(max_attempts=3, exceptions=(Timeout,))
    def _read(self, path: Path) -> Optional[Dict]:
        if not path.exists():
            return None
        with self._lock(path):
            try:
                return json.loads(path.read_text(encoding="utf-8"))
            except (OSError, ValueError) as exc:
                raise BasisCacheException(str(exc)) from exc

    def load(
        self,
        path: Path,
        degree: int,
        strand_count: int,
        relations: RelationSet,
        ring: Ring,
        config: RelationConfig,
    ) -> Optional[RelationBasis]:
        try:
            payload = self._read(path)
        except Timeout:
            logger.warning("basis cache entry stayed locked", extra={"context": {"path": str(path)}})
            return None
        except BasisCacheException as exc:
            logger.warning("unreadable basis cache entry", extra={"context": {"path": str(path), "error": str(exc)}})
            return None
        if payload is None:
            return None
        if payload.get("version") != GENERATOR_VERSION:
            logger.warning("basis cache version skew", extra={"context": {"path": str(path)}})
            return None

        codes = tuple(d.code for d in enumerate_diagrams(degree, strand_count, cap=config.diagram_cap))
        if tuple(payload.get("codes", ())) != codes:
            logger.warning("basis cache coordinates changed", extra={"context": {"path": str(path)}})
            return None

        echelon = Echelon(ring)
        for pivot, entries in payload.get("rows", []):
            echelon.rows[int(pivot)] = {int(column): _parse_coefficient(value) for column, value in entries}
        basis = RelationBasis(degree, strand_count, relations, ring, codes, echelon, config.antisymmetry_sign)
        if not self.revalidate(basis, config):
            logger.warning("basis cache failed revalidation", extra={"context": {"path": str(path)}})
            return None
        return basis

    def revalidate(self, basis: RelationBasis, config: RelationConfig) -> bool:
        generated = generate_relations(
            basis.degree, basis.strand_count, basis.relations, config.antisymmetry_sign, config.diagram_cap
        )
        step = max(1, len(generated) // SAMPLE_SIZE)
        if not all(basis.reduce(relation).is_zero() for relation in generated[::step]):
            return False
        # rows outside the generated span raise the cached rank above it
        vectors = ({basis.index[code]: value for code, value in relation.items()} for relation in generated)
        return modular_rank(vectors, len(basis.codes)) == basis.rank

    def save(self, path: Path, basis: RelationBasis) -> None:
        ensure_directory(str(path.parent))
        rows: List = [
            [pivot, [[column, format_coefficient(value)] for column, value in sorted(row.items())]]
            for pivot, row in basis.rows
        ]
        payload = {
            "version": GENERATOR_VERSION,
            "degree": basis.degree,
            "strand_count": basis.strand_count,
            "relations": basis.relations.key,
            "ring": basis.ring.value,
            "antisymmetry_sign": basis.antisymmetry_mode,
            "rank": basis.rank,
            "codes": list(basis.codes),
            "rows": rows,
        }
        try:
            with self._lock(path):
                atomic_write_json(str(path), payload)
        except Timeout as exc:
            raise BasisCacheException(f"could not lock {path}: {exc}") from exc
        except OSError as exc:
            raise BasisCacheException(str(exc)) from exc
