from pydantic import BaseModel, ConfigDict, Field, BeforeValidator, field_validator, model_validator
from typing import Dict, List, Optional, Literal, Tuple, Annotated

from backend.data.constants import SCHEMA_VERSION

# Partition : tuple d'entiers décroissant, sans zéros terminaux
Partition = Tuple[int, ...]
Permutation = Tuple[int, ...]
CoordinateSet = frozenset

# Accepte une liste ou une chaîne "3,4,6,7"
IntTuple = Annotated[
    Tuple[int, ...],
    BeforeValidator(lambda x: tuple(int(p) for p in str(x).replace(' ', '').split(',') if p) if isinstance(x, str) else x),
]


class GrassPerm(BaseModel):
    """Permutation grassmannienne a_1 < ... < a_n dans {1..N}, N = m + n."""
    model_config = ConfigDict(frozen=True)

    a: IntTuple
    n: int = Field(ge=1)
    m: int = Field(ge=1)

    @property
    def N(self) -> int:
        return self.m + self.n

    @model_validator(mode='after')
    def _check_entries(self):
        if len(self.a) != self.n:
            raise ValueError(f"w doit avoir exactement n={self.n} entrées, reçu {len(self.a)}")
        if any(x >= y for x, y in zip(self.a, self.a[1:])):
            raise ValueError(f"les entrées de w doivent être strictement croissantes : {self.a}")
        if self.a and (self.a[0] < 1 or self.a[-1] > self.N):
            raise ValueError(f"les entrées de w doivent être dans 1..{self.N}")
        return self

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + ")"


class BundleSpec(BaseModel):
    """Fibré ξ = ⊕ ℂ^{m_i} ⊗ 𝒰_i sur la variété de drapeaux partiels de ℂ^n."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    mult: Dict[int, int] = Field(default_factory=dict)

    @field_validator('mult')
    @classmethod
    def _drop_zero(cls, value: Dict[int, int]) -> Dict[int, int]:
        if any(m < 0 for m in value.values()):
            raise ValueError("les multiplicités doivent être positives")
        return {i: m for i, m in sorted(value.items()) if m > 0}

    @model_validator(mode='after')
    def _check_indices(self):
        for i in self.mult:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"indice de sous-fibré {i} hors de 1..{self.n - 1}")
        return self

    @property
    def indices(self) -> List[int]:
        return sorted(self.mult)

    @property
    def rank(self) -> int:
        return sum(i * m for i, m in self.mult.items())

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        return " ⊕ ".join(f"{m}·U{i}" for i, m in sorted(self.mult.items()))


class CohomologyTable(BaseModel):
    """entries[(t, j)] = {γ: multiplicité} : H^j de ∧^t ξ comme somme de 𝒮_γ ℂ^n."""
    n: int
    entries: Dict[Tuple[int, int], Dict[Partition, int]] = Field(default_factory=dict)

    def dimension(self, t: int, j: int) -> int:
        from backend.algebra.partitions import dim_schur
        return sum(c * dim_schur(g, self.n) for g, c in self.entries.get((t, j), {}).items())

    def dimensions(self) -> Dict[Tuple[int, int], int]:
        return {key: self.dimension(*key) for key in sorted(self.entries)}


class BettiTable(BaseModel):
    """entries[(i, d)] = β_{i,d}, seules les valeurs non nulles sont stockées."""
    entries: Dict[Tuple[int, int], int] = Field(default_factory=dict)
    codim: Optional[int] = None
    ambient: Optional[int] = None

    def get(self, i: int, d: int) -> int:
        return self.entries.get((i, d), 0)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)


class HilbertData(BaseModel):
    numerator: List[int]
    reduced_numerator: List[int]
    mn: int = Field(ge=0)
    codim: int = Field(ge=0)
    multiplicity: int


class CheckResult(BaseModel):
    passed: bool
    detail: str = ""


class ValidationReport(BaseModel):
    checks: Dict[str, CheckResult] = Field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [k for k, c in self.checks.items() if not c.passed]


class RunConfig(BaseModel):
    command: Literal['resolve', 'sweep', 'check-smooth']
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    w: Optional[IntTuple] = None
    k: Optional[int] = None
    s: Optional[int] = None
    normalize: bool = True
    up_to: bool = False
    output_format: Literal['text', 'json'] = 'text'
    out: Optional[str] = None
    workers: int = Field(default=1, ge=1)


# --- Sorties structurées ---

class BettiEntry(BaseModel):
    i: int
    d: int
    rank: int


class CohomologyEntry(BaseModel):
    t: int
    j: int
    dimension: int
    terms: Dict[str, int] = Field(default_factory=dict)


class ResolveReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    w: List[int]
    n: int
    m: int
    r: int
    length: int
    codim: int
    bundle: Dict[int, int]
    normalized_bundle: Dict[int, int]
    cohomology: List[CohomologyEntry] = Field(default_factory=list)
    betti: List[BettiEntry] = Field(default_factory=list)
    hilbert_numerator: List[int]
    reduced_numerator: List[int]
    multiplicity: int
    regularity: int
    conjectured_regularity: int
    conjecture_verdict: Literal['AGREE', 'DISAGREE']
    checks: Dict[str, CheckResult] = Field(default_factory=dict)


class SweepRow(BaseModel):
    w: List[int]
    n: int
    m: int
    r: int
    bundle: str
    codim: int
    multiplicity: int
    regularity: int
    conjectured_regularity: int
    verdict: Literal['AGREE', 'DISAGREE']
    checks_passed: bool
    shape: str


class SweepReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    m: int
    up_to: bool = False
    rows: List[SweepRow] = Field(default_factory=list)

    @property
    def disagreements(self) -> List[SweepRow]:
        return [row for row in self.rows if row.verdict != 'AGREE']


class SmoothnessReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    w: List[int]
    n: int
    m: int
    s: int
    length: int
    w_max: List[int]
    tangent_dimension: int
    smooth_by_tangent: bool
    contains_4231: bool
    contains_3412: bool
    smooth_by_patterns: bool
    agree: bool
    block_coordinates: Optional[List[Tuple[int, int]]] = None
    trapezoid_coordinates: Optional[List[Tuple[int, int]]] = None
