from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from core.schemas.enums import ErrorCode, EvidenceKind, ResidualStatus, Verdict

# A Gaussian rational on the wire: "p/q", "a+bi" or the pair [re, im].
GaussValue = Union[str, List[str]]
# A polynomial in the parameter x: Gaussian rational strings from degree 0 upward.
XPolyValue = Union[str, List[str]]


class RatFunPayload(BaseModel):
    var: str = "t"
    num: List[GaussValue] = Field(default_factory=list)
    den: List[GaussValue] = Field(default_factory=lambda: [["1", "0"]])


class SeriesPayload(BaseModel):
    var: str = "t"
    param: str = "x"
    order: Optional[int] = None
    coeffs: List[XPolyValue] = Field(default_factory=list)


class ShiftPayload(BaseModel):
    alpha: GaussValue = "1"
    beta: GaussValue = Field(default_factory=lambda: ["1", "0"])


class TauEquationPayload(BaseModel):
    shift: ShiftPayload = Field(default_factory=ShiftPayload)
    coeffs: List[RatFunPayload]
    rhs: RatFunPayload = Field(default_factory=RatFunPayload)


class LhsTerm(BaseModel):
    i: int = Field(ge=0)
    u_poly: List[XPolyValue] = Field(default_factory=list)


class RhsTerm(BaseModel):
    m: int = Field(default=0, ge=0)
    rate: GaussValue = "0"
    coeff: XPolyValue = "1"


class EgfEquationPayload(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: GaussValue = Field(default="1", alias="lambda")
    lhs: List[LhsTerm]
    rhs: List[RhsTerm] = Field(default_factory=list)
    init: List[XPolyValue] = Field(default_factory=list)


class EvidencePayload(BaseModel):
    kind: EvidenceKind
    universal_denominator_degree: Optional[int] = None
    poly_degree_bound: Optional[int] = None
    homogeneous_dimension: int = 0
    comparison_order: Optional[int] = None
    detail: Optional[str] = None


class CertificatePayload(BaseModel):
    verdict: Verdict
    equation: TauEquationPayload
    evidence: EvidencePayload
    series_prefix: List[str] = Field(default_factory=list)
    series_prefix_hash: str = ""
    order: int
    witness: Optional[RatFunPayload] = None


class TelescoperPayload(BaseModel):
    result: str
    checked_n: int
    n: Optional[int] = None
    alphas: List[str] = Field(default_factory=list)
    g: Optional[RatFunPayload] = None


class RationalResultPayload(BaseModel):
    result: str
    witness: Optional[RatFunPayload] = None
    homogeneous: List[RatFunPayload] = Field(default_factory=list)
    universal_denominator_degree: Optional[int] = None
    poly_degree_bound: Optional[int] = None


class ResidualReportPayload(BaseModel):
    status: ResidualStatus
    order: int
    first_failing_order: Optional[int] = None


class CheckResult(BaseModel):
    name: str
    group: str
    passed: bool
    detail: str = ""


class AcceptanceReport(BaseModel):
    passed: bool
    total: int
    failed: int
    checks: List[CheckResult] = Field(default_factory=list)


class ErrorBody(BaseModel):
    code: ErrorCode
    message: str


class ErrorPayload(BaseModel):
    error: ErrorBody


class CatalogEntryPayload(BaseModel):
    name: str
    title: str
    provenance: str
    parameters: List[str] = Field(default_factory=list)
    symbolic_x: bool = False
    beta: str = "1"
    order: int = 1


class LociPayload(BaseModel):
    name: str
    singular_x: List[str] = Field(default_factory=list)
    degenerate_x: List[str] = Field(default_factory=list)
    singular_gamma: List[str] = Field(default_factory=list)


class NumericPayload(BaseModel):
    """Floating-point results from the numeric subcommands."""

    check: str
    passed: bool
    values: Dict[str, Any] = Field(default_factory=dict)
