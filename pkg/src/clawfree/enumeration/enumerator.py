"""
Main Matroid Enumerator
Picks the enumerator for a matroid class and spools its output to files
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type, Union

from ..core.config import GENERATOR_VERSION, EnumSpec, MatroidClass
from ..matroids.base import Matroid
from ..matroids.io import serialize_matroid
from ..reporting.schemas import EnumerationManifest
from .base_enumerator import BaseEnumerator
from .bases import BasisEnumerator
from .binary import BinaryEnumerator
from .rank3 import Rank3Enumerator

logger = logging.getLogger(__name__)

ENUMERATORS: Dict[MatroidClass, Type[BaseEnumerator]] = {
    MatroidClass.BINARY: BinaryEnumerator,
    MatroidClass.RANK3: Rank3Enumerator,
    MatroidClass.BASES: BasisEnumerator,
}


class MatroidEnumerator:
    """Runs the enumeration an EnumSpec describes"""

    def __init__(
        self,
        spec: EnumSpec,
        triangle_free: bool = False,
        loopless_only: bool = True,
        shards: int = 1,
        deadline: Optional[float] = None,
    ):
        self.spec = spec
        self.shards = shards
        if spec.matroid_class == MatroidClass.BASES:
            self.enumerator: BaseEnumerator = BasisEnumerator(
                spec, loopless_only, deadline
            )
        else:
            enumerator_class = ENUMERATORS[spec.matroid_class]
            self.enumerator = enumerator_class(spec, triangle_free, deadline)

    def run(self) -> List[Tuple[bytes, Matroid]]:
        """(canonical form, matroid) pairs of every size up to the bound"""
        logger.info(
            f"Enumerating {self.spec.matroid_class.value} matroids "
            f"of rank {self.spec.rank}"
        )
        return self.enumerator.run(self.shards)

    def matroids(self, size: Optional[int] = None) -> List[Matroid]:
        return [M for _, M in self.run() if size is None or M.n == size]

    def spool(
        self, out_dir: Union[str, Path], stem: Optional[str] = None
    ) -> EnumerationManifest:
        """Write every matroid to one records file plus a JSON manifest"""
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        spec = self.spec
        if stem is None:
            stem = f"{spec.matroid_class.value}-r{spec.rank}-n{spec.effective_bound}"
        records = out_dir / f"{stem}.txt"

        pairs = self.run()
        records.write_text("".join(serialize_matroid(M) for _, M in pairs))
        manifest = EnumerationManifest(
            matroid_class=self.spec.matroid_class.value,
            params={
                "rank": self.spec.rank,
                "n_max": self.spec.n_max,
                "size_bound": self.spec.size_bound,
                "require_simple": int(self.spec.require_simple),
            },
            count=len(pairs),
            generator_version=GENERATOR_VERSION,
            records_file=records.name,
        )
        manifest_path = out_dir / f"{stem}.manifest.json"
        manifest_path.write_text(manifest.model_dump_json(indent=2) + "\n")
        logger.info(f"Spooled {len(pairs)} matroids to {records}")
        return manifest
