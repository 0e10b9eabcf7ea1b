"""
Type descriptors of Lie triple systems and their string grammar.

Grammar (one descriptor per string)::

    Geo:t=<angle>          P:phi=<angle>:<tau>     P0:<tau>   P12:<tau>   P44:<tau>
    S13:<ell>              S5                      G2:<tau>   PxP:<tau>,<tau>
    S1xS5:<ell>            Sp2                     Q3

where ``<tau>`` is ``R<l>``, ``C<l>``, ``H<l>`` or ``S3`` and ``<angle>`` is a
decimal number, ``pi``, ``pi/<q>`` or ``arctan(<p>/<q>)``.
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..qlinalg.hptype import HPType
from ..utils.errors import DescriptorError
from ..utils.logger import logger

FAMILIES = ("Geo", "P0", "S13", "P12", "P44", "S5", "G2", "PxP", "S1xS5", "Sp2", "Q3")
TAU_FAMILIES = ("P0", "P12", "P44", "G2")

PHI_ZERO = 0.0
PHI_P12 = float(np.arctan(0.5))
PHI_S13 = float(np.arctan(1.0 / 3.0))
PHI_PI4 = float(np.pi / 4)
ANGLE_TOL = 1e-9

TAU_RE = r"S3|[RCH]\d+"
ANGLE_RE = re.compile(
    r"^(?:(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)"
    r"|(?P<pi>pi)(?:/(?P<pid>\d+))?"
    r"|(?:arctan|atan)\(?(?P<p>\d+)/(?P<q>\d+)\)?)$"
)


def parse_angle(text: str) -> float:
    """Parse ``0.3``, ``pi/4`` or ``arctan(1/3)`` into a float."""
    match = ANGLE_RE.match(text.strip().replace(" ", ""))
    if not match:
        raise DescriptorError(f"Cannot parse angle {text!r}")
    if match.group("num") is not None:
        return float(match.group("num"))
    if match.group("pi") is not None:
        denominator = int(match.group("pid") or 1)
        if denominator == 0:
            raise DescriptorError("Angle pi/0 is undefined")
        return float(np.pi / denominator)
    q = int(match.group("q"))
    if q == 0:
        raise DescriptorError(f"Angle {text!r} divides by zero")
    return float(np.arctan(int(match.group("p")) / q))


@dataclass(frozen=True)
class LtsDescriptor:
    """
    The type of a Lie triple system.

    Only the fields of the family are set: ``t`` for Geo, ``tau`` for P0, P12,
    P44 and G2, ``tau`` and ``tau2`` for PxP, ``ell`` for S13 and S1xS5.
    """

    family: str
    t: Optional[float] = None
    tau: Optional[HPType] = None
    tau2: Optional[HPType] = None
    ell: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DescriptorError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family == "Geo":
            if self.t is None or not -ANGLE_TOL <= self.t <= PHI_PI4 + ANGLE_TOL:
                raise DescriptorError(f"Geo needs t in [0, pi/4], got {self.t}")
        if self.family in TAU_FAMILIES and self.tau is None:
            raise DescriptorError(f"{self.family} needs an HP-type")
        if self.family == "G2" and self.tau.kind == "S3":
            raise DescriptorError("G2 is not defined for the S3 type")
        if self.family == "PxP" and (self.tau is None or self.tau2 is None):
            raise DescriptorError("PxP needs two HP-types")
        if self.family == "S13" and self.ell not in (2, 3):
            raise DescriptorError(f"S13 needs ell in {{2, 3}}, got {self.ell}")
        if self.family == "S1xS5" and (self.ell is None or not 2 <= self.ell <= 5):
            raise DescriptorError(f"S1xS5 needs 2 <= ell <= 5, got {self.ell}")

    # convenience constructors

    @classmethod
    def geo(cls, t: float) -> "LtsDescriptor":
        return cls("Geo", t=float(t))

    @classmethod
    def with_tau(cls, family: str, tau) -> "LtsDescriptor":
        return cls(family, tau=_as_type(tau))

    @classmethod
    def product(cls, tau1, tau2) -> "LtsDescriptor":
        return cls("PxP", tau=_as_type(tau1), tau2=_as_type(tau2))

    @classmethod
    def with_ell(cls, family: str, ell: int) -> "LtsDescriptor":
        return cls(family, ell=int(ell))

    @classmethod
    def plain(cls, family: str) -> "LtsDescriptor":
        return cls(family)

    @property
    def types(self) -> Tuple[HPType, ...]:
        return tuple(t for t in (self.tau, self.tau2) if t is not None)

    @property
    def phi(self) -> Optional[float]:
        """The constant characteristic angle of the type, None for rank 2."""
        return {
            "Geo": self.t,
            "P0": PHI_ZERO,
            "S13": PHI_S13,
            "P12": PHI_P12,
            "P44": PHI_PI4,
            "S5": PHI_PI4,
        }.get(self.family)

    def validate(self, n: int) -> None:
        """
        Check the dimension bounds of the type inside G2(H^{n+2}).

        Raises:
            DescriptorError: naming the violated bound
        """
        if n < 2:
            raise DescriptorError(f"n must be at least 2, got {n}")
        family, tau = self.family, self.tau
        if family == "P0" and tau.dim > n:
            raise DescriptorError(f"P0 needs dim(tau) <= n, got {tau} at n={n}")
        if family == "P12":
            if tau.dim == 1 and tau.width > n - 1:
                raise DescriptorError(f"P12 with dim(tau)=1 needs w(tau) <= n-1, got {tau} at n={n}")
            if tau.dim == 2:
                bound = {"R": 3, "C": 4, "H": 5}[tau.kind]
                if n < bound:
                    raise DescriptorError(f"P12 with tau={tau} needs n >= {bound}, got n={n}")
            if tau.dim > 2:
                raise DescriptorError(f"P12 needs dim(tau) <= 2, got {tau}")
        if family == "P44" and 2 * tau.dim > n:
            raise DescriptorError(f"P44 needs dim(tau) <= n/2, got {tau} at n={n}")
        if family == "G2" and tau.dim > n:
            raise DescriptorError(f"G2 needs dim(tau) <= n, got {tau} at n={n}")
        if family == "PxP" and tau.dim + self.tau2.dim > n:
            raise DescriptorError(f"PxP needs dim(tau1) + dim(tau2) <= n, got {tau}, {self.tau2} at n={n}")

    def dimension(self) -> int:
        """Real dimension of the Lie triple systems of this type."""
        family = self.family
        if family in ("P0", "P12", "P44"):
            return self.tau.real_dim
        if family == "G2":
            return 2 * self.tau.real_dim
        if family == "PxP":
            return self.tau.real_dim + self.tau2.real_dim
        if family == "S13":
            return self.ell
        if family == "S1xS5":
            return 1 + self.ell
        return {"Geo": 1, "S5": 5, "Sp2": 10, "Q3": 6}[family]

    def rank(self) -> int:
        if self.family == "G2":
            return min(2, self.tau.ell)
        return 2 if self.family in ("PxP", "S1xS5", "Sp2", "Q3") else 1

    def is_valid(self, n: int) -> bool:
        try:
            self.validate(n)
        except DescriptorError:
            return False
        return True

    def canonical(self) -> "LtsDescriptor":
        """
        Representative under the identifications of the rank-one families.

        Geo at t = 0, arctan(1/2), pi/4 is the P0, P12, P44 type of (R, 1),
        and PxP is ordered so that the larger factor comes first.
        """
        if self.family == "Geo":
            for phi, family in ((PHI_ZERO, "P0"), (PHI_P12, "P12"), (PHI_PI4, "P44")):
                if abs(self.t - phi) <= 1e-7:
                    return LtsDescriptor(family, tau=HPType("R", 1))
            return self
        if self.family == "PxP":
            first, second = sorted(self.types, key=_tau_key, reverse=True)
            return LtsDescriptor("PxP", tau=first, tau2=second)
        return self

    def __str__(self) -> str:
        if self.family == "Geo":
            return f"Geo:t={self.t!r}"
        if self.family in TAU_FAMILIES:
            return f"{self.family}:{self.tau}"
        if self.family == "PxP":
            return f"PxP:{self.tau},{self.tau2}"
        if self.family in ("S13", "S1xS5"):
            return f"{self.family}:{self.ell}"
        return self.family


def _as_type(tau) -> HPType:
    return tau if isinstance(tau, HPType) else HPType.parse(tau)


def _tau_key(tau: HPType) -> Tuple[int, int]:
    return (tau.dim, tau.width)


class DescriptorParser:
    """Parses descriptor strings of the command-line grammar."""

    PATTERNS = {
        "geo": re.compile(r"^Geo:t=(?P<t>.+)$"),
        "phi": re.compile(rf"^P:phi=(?P<phi>[^:]+):(?P<tau>{TAU_RE})$"),
        "tau": re.compile(rf"^(?P<family>P0|P12|P44|G2):(?P<tau>{TAU_RE})$"),
        "product": re.compile(rf"^PxP:(?P<tau1>{TAU_RE}),(?P<tau2>{TAU_RE})$"),
        "ell": re.compile(r"^(?P<family>S13|S1xS5):(?P<ell>\d+)$"),
        "plain": re.compile(r"^(?P<family>S5|Sp2|Q3)$"),
    }

    def parse(self, text: str) -> LtsDescriptor:
        """
        Parse a descriptor string.

        Args:
            text: Descriptor such as ``"PxP:H1,R2"`` or ``"Geo:t=arctan(1/3)"``

        Returns:
            LtsDescriptor

        Raises:
            DescriptorError: on grammar errors and out-of-range parameters
        """
        text = text.strip().replace(" ", "")
        patterns = self.PATTERNS

        match = patterns["geo"].match(text)
        if match:
            return LtsDescriptor.geo(parse_angle(match.group("t")))

        match = patterns["phi"].match(text)
        if match:
            phi = parse_angle(match.group("phi"))
            for value, family in ((PHI_ZERO, "P0"), (PHI_P12, "P12"), (PHI_PI4, "P44")):
                if abs(phi - value) <= 1e-7:
                    return LtsDescriptor.with_tau(family, match.group("tau"))
            raise DescriptorError(f"No projective type has phi={phi}; expected 0, arctan(1/2) or pi/4")

        match = patterns["tau"].match(text)
        if match:
            return LtsDescriptor.with_tau(match.group("family"), match.group("tau"))

        match = patterns["product"].match(text)
        if match:
            return LtsDescriptor.product(match.group("tau1"), match.group("tau2"))

        match = patterns["ell"].match(text)
        if match:
            return LtsDescriptor.with_ell(match.group("family"), int(match.group("ell")))

        match = patterns["plain"].match(text)
        if match:
            return LtsDescriptor.plain(match.group("family"))

        raise DescriptorError(f"Cannot parse descriptor {text!r}")

    def validate(self, text: str, n: Optional[int] = None) -> Tuple[bool, str]:
        """
        Validate a descriptor string, optionally against n.

        Returns:
            Tuple of (is_valid, error_message)
        """
        try:
            descriptor = self.parse(text)
            if n is not None:
                descriptor.validate(n)
        except DescriptorError as exc:
            logger.debug(f"Invalid descriptor {text!r}: {exc}")
            return False, str(exc)
        return True, ""


def parse_descriptor(text: str) -> LtsDescriptor:
    return DescriptorParser().parse(text)
