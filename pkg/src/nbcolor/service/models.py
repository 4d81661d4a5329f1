"""Request and response bodies for the HTTP service."""

from pydantic import BaseModel

from ..balance import DEFAULT_BUDGET


class SolveRequest(BaseModel):
    graph6: str
    budget: int = DEFAULT_BUDGET


class SolveResponse(BaseModel):
    status: str  # yes | no | budget
    coloring: list[int] | None = None
    checks_passed: bool


class VerifyRequest(BaseModel):
    graph6: str
    coloring: list[int]


class VerifyResponse(BaseModel):
    balanced: bool
    vertex_class_sizes: list[int]
    edge_class_sizes: list[list[int]]


class FamilyRequest(BaseModel):
    name: str  # petersen | pappus | mobius
    params: list[int]


class FamilyResponse(BaseModel):
    graph6: str
    applicable: bool
    coloring: list[int] | None = None
    checks_passed: bool


class ScanRequest(BaseModel):
    family: str
    m_max: int | None = None
    n_max: int | None = None
    budget: int = DEFAULT_BUDGET


class ScanRowModel(BaseModel):
    params: list[int]
    solvable: bool
    predicted: bool
    agree: bool


class ScanResponse(BaseModel):
    rows: list[ScanRowModel]
    all_agree: bool


class ClassifyRequest(BaseModel):
    n: int | None = None
    graph6_lines: list[str] | None = None
    budget: int = DEFAULT_BUDGET
    double_check: bool = True


class RecordModel(BaseModel):
    graph6: str
    balanced: str
    coloring: list[int] | None
    precheck_ok: bool
    precheck_reason: str | None
    forbidden: list[str]
    has_bridge: bool
    tait_colorable: bool | None


class ClassifySummaryModel(BaseModel):
    total: int
    balanced: int
    unbalanced: int
    budget_exhausted: int
    checks_passed: bool
    failures: list[str]


class ClassifyResponse(BaseModel):
    records: list[RecordModel]
    summary: ClassifySummaryModel


class CubicAnalyzeRequest(BaseModel):
    graph6: str
    budget: int = DEFAULT_BUDGET


class DatasetModel(BaseModel):
    parts: list[list[int]]
    maps: dict[str, dict[str, int]]


class CubicAnalyzeResponse(BaseModel):
    status: str  # yes | no | budget
    coloring: list[int] | None
    matchings: list[list[list[int]]] | None
    forbidden: list[str]
    has_bridge: bool
    tait_colorable: bool
    dataset: DatasetModel | None
    checks_passed: bool


class CirculantVerifyRequest(BaseModel):
    family: str  # petersen | pappus
    a: int
    j: int
    m: int | None = None


class CirculantVerifyResponse(BaseModel):
    n: int
    determinant: str
    determinant_nonzero: bool
    solution: list[str]
    solution_constant: str | None
    search: dict[str, list[list[int]]]
    checks_passed: bool


class HealthResponse(BaseModel):
    status: str
    version: str
