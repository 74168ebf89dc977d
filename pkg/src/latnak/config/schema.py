from dataclasses import dataclass, field
from typing import Literal

from sympy.polys.domains.domain import Domain

from latnak.constants import DEFAULT_PRIME, ISO_CAP, MAX_DIM
from latnak.linalg import make_field


@dataclass
class FieldConfig:
    """
    Schema for the coefficient field section

    Attributes:
        kind (Literal["rationals", "prime"]): Field of rational numbers or a prime field (default: "rationals")
        prime (int): Characteristic of the prime field, an odd prime below 2^31 (default: 32003)
    """

    kind: Literal["rationals", "prime"] = "rationals"
    prime: int = DEFAULT_PRIME


@dataclass
class LimitsConfig:
    """
    Schema for the size caps of categorical verification

    Attributes:
        max_dim (int): Largest ambient algebra dimension verified with complexes (default: 60)
        iso_cap (int): Largest degree-zero Hom space searched by the isomorphism test (default: 8)
        max_sample (int): Number of random instances drawn by property suites (default: 50)
    """

    max_dim: int = MAX_DIM
    iso_cap: int = ISO_CAP
    max_sample: int = 50


@dataclass
class OutputConfig:
    """
    Schema for the output section

    Attributes:
        format (Literal["json", "csv", "text"]): Format of command results (default: "text")
        verbosity (Literal["minimal", "normal", "verbose"]): Level of detail in reports (default: "normal")
        color (Literal["auto", "always", "never"]): When to use colored output (default: "auto")
    """

    format: Literal["json", "csv", "text"] = "text"
    verbosity: Literal["minimal", "normal", "verbose"] = "normal"
    color: Literal["auto", "always", "never"] = "auto"


@dataclass
class RunSettings:
    """
    Schema for the run section

    Attributes:
        seed (int): Seed of the random property suites (default: 0)
        verify (bool): Whether to check the post-conditions of every projection (default: True)
        workers (int): Number of threads used for certificate batches (default: 4)
    """

    seed: int = 0
    verify: bool = True
    workers: int = 4


@dataclass
class RunConfig:
    """
    Main configuration object for latnak

    Attributes:
        limits (LimitsConfig): Size caps
        output (OutputConfig): Output configuration
        run (RunSettings): Run settings
        field (FieldConfig): Coefficient field configuration
    """

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    run: RunSettings = field(default_factory=RunSettings)
    # declared last, the name shadows dataclasses.field in the class body
    field: FieldConfig = field(default_factory=FieldConfig)

    def domain(self) -> Domain:
        """
        The sympy field selected by the field section

        Raises:
            ConfigError: If the prime is not an odd prime below 2^31
        """

        return make_field(self.field.kind, self.field.prime)
