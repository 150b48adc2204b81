from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

Coords = Tuple[int, ...]


class PairGap(BaseModel):
    """An adjacent domain pair and the codomain distance between its images."""
    a: Coords
    b: Coords
    gap: Optional[int] = Field(None, description="Codomain path distance; None when the images are disconnected")


class LipschitzReport(BaseModel):
    constant: Optional[int] = Field(..., description="Least Lipschitz constant; None if some adjacent pair maps across components")
    witness: Optional[PairGap] = Field(None, description="Lexicographically least pair realizing the constant")

    @property
    def disconnected(self) -> bool:
        return self.constant is None


class AntipodalWitness(BaseModel):
    point: Coords
    antipodal_point: Coords
    value: Coords
    antipodal_value: Coords
    distance: int = Field(..., description="Codomain path distance between f(x) and f(-x)")
    method: Literal["direct", "proof"] = "direct"
    lipschitz_constant: Optional[int] = None
    bound: Optional[int] = Field(None, description="Strict upper bound promised by the theorem, when one applies")
    theorem_satisfied: Optional[bool] = None
    corollary_satisfied: Optional[bool] = Field(None, description="distance <= 2m - 1, the c_1^(2m-1) form")
    t_simplex_meet: Optional[Coords] = Field(
        None, description="Common point of T(f(sigma)) and T(f(-sigma)) found while rebuilding a c1-power witness"
    )


class InvolutionReport(BaseModel):
    total: bool
    involutive: bool
    free: bool
    continuous: bool
    failures: List[str] = Field(default_factory=list, description="First offending points or pairs per check")

    @property
    def ok(self) -> bool:
        return self.total and self.involutive and self.free and self.continuous


class BestPair(BaseModel):
    x: Coords
    antipode: Coords
    gap: int


class AnalysisReport(BaseModel):
    image_size: Tuple[int, int]
    adjacency: str
    lipschitz_constant: int
    lipschitz_witness: Optional[PairGap] = None
    bound: int
    best_pair: BestPair
    theorem_satisfied: Optional[bool] = Field(None, description="gap < 2m; None when m = 0")


class ViolationPair(BaseModel):
    sigma: List[Coords]
    rho: List[Coords]


class RegularityStatistics(BaseModel):
    sigma_count: int
    rho_count: int
    pairs_examined: int
    vertex_condition_hits: int
    hull_tests: int
    runtime_seconds: float


class RegularityFinding(BaseModel):
    dimension: int
    k: int
    origin: Coords
    verdict: Literal["regular-in-window", "violation"]
    violation_pair: Optional[ViolationPair] = None
    statistics: RegularityStatistics


class TheoremCheck(BaseModel):
    name: str
    statement: str
    passed: bool
    instances: int
    failures: List[Dict[str, Any]] = Field(default_factory=list, description="Violating instances, serialized for replay")
    observed_max: Optional[int] = Field(None, description="Largest witness distance seen across the corpus")


class VerificationReport(BaseModel):
    scope: str
    seed: int
    checks: List[TheoremCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class CounterexampleReport(BaseModel):
    box: List[Tuple[int, int]]
    c1_c1_continuous: bool
    antipodal_c1_matches: List[Coords] = Field(..., description="Boundary points with f(x) adjacent-or-equal to f(-x) under c_1")
    c2_c1_breaks: List[Tuple[Coords, Coords]]
    c3_c1_breaks: List[Tuple[Coords, Coords]]
    claims_reproduced: bool
