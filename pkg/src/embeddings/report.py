"""
Result record shared by the embedding constructions
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..constructors.classifier import classify, same_type
from ..constructors.descriptor import LtsDescriptor
from ..lts.subspace import RealSubspace
from ..lts.verify import is_lts
from ..utils.errors import DomainError
from ..utils.logger import logger


@dataclass
class EmbeddingReport:
    """Tangent space of a constructed submanifold with its verification."""

    target_descriptor: LtsDescriptor
    tangent: RealSubspace
    is_lts: bool
    residual: float
    classified_as: Optional[LtsDescriptor] = None
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def matches(self) -> bool:
        """Whether the tangent space is an LTS of the expected type."""
        if not self.is_lts or self.classified_as is None:
            return False
        return same_type(self.classified_as, self.target_descriptor)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": str(self.target_descriptor),
            "dim": self.tangent.dim,
            "is_lts": self.is_lts,
            "residual": self.residual,
            "classified_as": None if self.classified_as is None else str(self.classified_as),
            "residuals": dict(self.residuals),
        }


def make_report(
    target: LtsDescriptor, tangent: RealSubspace, residuals: Optional[Dict[str, float]] = None
) -> EmbeddingReport:
    """
    Verify and classify a tangent space.

    Args:
        target: The type the construction should produce
        tangent: Tangent space at the base point
        residuals: Construction residuals to carry along

    Returns:
        EmbeddingReport; ``classified_as`` is None when classification fails
    """
    passed, residual = is_lts(tangent)
    classified = None
    if passed and tangent.dim > 0:
        try:
            classified = classify(tangent)
        except DomainError as exc:
            logger.warning(f"Tangent space of {target} could not be classified: {exc}")
    report = EmbeddingReport(target, tangent, passed, residual, classified, dict(residuals or {}))
    logger.info(f"Embedding report for {target}: dim={tangent.dim}, lts={passed}, classified as {classified}")
    return report
