"""HTTP service exposing the solver, families, scans, and verifications."""

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..balance import (
    BudgetExhausted,
    is_3_balanced,
    solve_3_balanced,
    stats,
)
from ..circulant import (
    BadSpecError,
    CirculantSpec,
    SingularMatrixError,
    assemble_pappus_system,
    assemble_petersen_system,
    determinant,
    pappus_subcase_solutions,
    petersen_split_solutions,
    search_vanishing_sums_pappus,
    search_vanishing_sums_petersen,
    solve_all_ones,
)
from ..classify import classify_corpus, corpus_from_graph6, enumerate_cubic, family_scan
from ..cubic import (
    InvalidDatasetError,
    NotCubicError,
    dataset_from_colored_graph,
    forbidden_scan,
    induced_edge_coloring,
    matchings_from_edge_coloring,
    tait_coloring_exists,
)
from ..families import (
    BadParamsError,
    NotApplicableError,
    gen_pappus,
    gen_petersen,
    mobius_coloring,
    mobius_ladder,
    pappus_coloring,
    petersen_coloring,
)
from ..graphs import Graph, Graph6Error, emit_graph6, parse_graph6
from . import models


def _parse(graph6: str) -> Graph:
    try:
        return parse_graph6(graph6.strip())
    except Graph6Error as exc:
        raise HTTPException(status_code=422, detail=f"bad graph6: {exc}")


def create_app() -> FastAPI:
    app = FastAPI(title="nbcolor", version=__version__)

    @app.get("/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse(status="ok", version=__version__)

    @app.post("/solve", response_model=models.SolveResponse)
    def solve(req: models.SolveRequest):
        g = _parse(req.graph6)
        try:
            coloring = solve_3_balanced(g, budget=req.budget)
        except BudgetExhausted:
            return models.SolveResponse(status="budget", checks_passed=False)
        if coloring is None:
            return models.SolveResponse(status="no", checks_passed=True)
        return models.SolveResponse(
            status="yes", coloring=coloring, checks_passed=is_3_balanced(g, coloring)
        )

    @app.post("/verify", response_model=models.VerifyResponse)
    def verify(req: models.VerifyRequest):
        g = _parse(req.graph6)
        if len(req.coloring) != g.n or any(c not in (0, 1, 2) for c in req.coloring):
            raise HTTPException(status_code=422, detail="coloring must list one color in {0,1,2} per vertex")
        st = stats(g, req.coloring)
        matrix = [[0] * 3 for _ in range(3)]
        for (i, j), count in st.edge_class_sizes.items():
            matrix[i][j] = count
            matrix[j][i] = count
        return models.VerifyResponse(
            balanced=is_3_balanced(g, req.coloring),
            vertex_class_sizes=list(st.vertex_class_sizes),
            edge_class_sizes=matrix,
        )

    @app.post("/family", response_model=models.FamilyResponse)
    def family(req: models.FamilyRequest):
        builders = {
            "petersen": (2, gen_petersen, petersen_coloring),
            "pappus": (3, gen_pappus, pappus_coloring),
            "mobius": (1, mobius_ladder, mobius_coloring),
        }
        if req.name not in builders:
            raise HTTPException(status_code=422, detail=f"unknown family {req.name!r}")
        arity, build, color = builders[req.name]
        if len(req.params) != arity:
            raise HTTPException(
                status_code=422, detail=f"{req.name} takes {arity} parameter(s)"
            )
        try:
            g = build(*req.params)
        except BadParamsError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        try:
            coloring = color(*req.params)
        except NotApplicableError:
            return models.FamilyResponse(
                graph6=emit_graph6(g), applicable=False, checks_passed=True
            )
        return models.FamilyResponse(
            graph6=emit_graph6(g),
            applicable=True,
            coloring=coloring,
            checks_passed=is_3_balanced(g, coloring),
        )

    @app.post("/scan", response_model=models.ScanResponse)
    def scan(req: models.ScanRequest):
        try:
            rows = family_scan(
                req.family, m_max=req.m_max, n_max=req.n_max, budget=req.budget
            )
        except BadParamsError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        out = [
            models.ScanRowModel(
                params=list(r.params),
                solvable=r.solvable,
                predicted=r.predicted,
                agree=r.agree,
            )
            for r in rows
        ]
        return models.ScanResponse(rows=out, all_agree=all(r.agree for r in rows))

    @app.post("/classify", response_model=models.ClassifyResponse)
    def classify(req: models.ClassifyRequest):
        if (req.n is None) == (req.graph6_lines is None):
            raise HTTPException(
                status_code=422, detail="give exactly one of n or graph6_lines"
            )
        if req.n is not None:
            try:
                graphs = enumerate_cubic(req.n)
            except ValueError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
        else:
            try:
                graphs = corpus_from_graph6("\n".join(req.graph6_lines))
            except Graph6Error as exc:
                raise HTTPException(status_code=422, detail=f"bad graph6: {exc}")
        records, summary = classify_corpus(
            graphs, budget=req.budget, double_check=req.double_check
        )
        return models.ClassifyResponse(
            records=[
                models.RecordModel(
                    graph6=r.graph6,
                    balanced=r.balanced,
                    coloring=r.coloring,
                    precheck_ok=r.precheck_ok,
                    precheck_reason=r.precheck_reason,
                    forbidden=list(r.forbidden),
                    has_bridge=r.has_bridge,
                    tait_colorable=r.tait_colorable,
                )
                for r in records
            ],
            summary=models.ClassifySummaryModel(
                total=summary.total,
                balanced=summary.balanced,
                unbalanced=summary.unbalanced,
                budget_exhausted=summary.budget_exhausted,
                checks_passed=summary.checks_passed,
                failures=summary.failures,
            ),
        )

    @app.post("/cubic/analyze", response_model=models.CubicAnalyzeResponse)
    def cubic_analyze(req: models.CubicAnalyzeRequest):
        g = _parse(req.graph6)
        if not g.is_cubic():
            raise HTTPException(status_code=422, detail="graph is not cubic")
        scan_result = forbidden_scan(g)
        tait = tait_coloring_exists(g)
        try:
            coloring = solve_3_balanced(g, budget=req.budget)
        except BudgetExhausted:
            return models.CubicAnalyzeResponse(
                status="budget",
                coloring=None,
                matchings=None,
                forbidden=list(scan_result.patterns),
                has_bridge=scan_result.has_bridge,
                tait_colorable=tait,
                dataset=None,
                checks_passed=False,
            )
        if coloring is None:
            return models.CubicAnalyzeResponse(
                status="no",
                coloring=None,
                matchings=None,
                forbidden=list(scan_result.patterns),
                has_bridge=scan_result.has_bridge,
                tait_colorable=tait,
                dataset=None,
                checks_passed=True,
            )
        ec = induced_edge_coloring(g, coloring)
        matchings = matchings_from_edge_coloring(g, ec)
        try:
            ds = dataset_from_colored_graph(g, coloring)
            ds.validate()
            dataset = models.DatasetModel(
                parts=[list(p) for p in ds.parts],
                maps={
                    f"{i}{j}": {str(u): v for u, v in sorted(ds.maps[i, j].items())}
                    for i in range(3)
                    for j in range(3)
                },
            )
            checks = is_3_balanced(g, coloring)
        except (NotCubicError, InvalidDatasetError):
            dataset = None
            checks = False
        return models.CubicAnalyzeResponse(
            status="yes",
            coloring=coloring,
            matchings=[[list(e) for e in m] for m in matchings],
            forbidden=list(scan_result.patterns),
            has_bridge=scan_result.has_bridge,
            tait_colorable=tait,
            dataset=dataset,
            checks_passed=checks,
        )

    @app.post("/circulant/verify", response_model=models.CirculantVerifyResponse)
    def circulant_verify(req: models.CirculantVerifyRequest):
        try:
            spec = CirculantSpec(a=req.a, j=req.j, m=req.m)
        except BadSpecError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        n = spec.n
        if req.family == "petersen":
            try:
                mat = assemble_petersen_system(spec)
            except BadSpecError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            pairs = search_vanishing_sums_petersen()
            mod6, mod4 = petersen_split_solutions()
            search = {
                "exponent_pairs": [list(p) for p in pairs],
                "k_mod_6": [[k] for k in mod6],
                "k_mod_4": [[k] for k in mod4],
            }
        elif req.family == "pappus":
            try:
                mat = assemble_pappus_system(spec)
            except BadSpecError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            triples = search_vanishing_sums_pappus()
            search = {"exponent_triples": [list(t) for t in triples]}
            search.update(
                {
                    f"subcase_{name}": [[k] for k in ks]
                    for name, ks in pappus_subcase_solutions().items()
                }
            )
        else:
            raise HTTPException(
                status_code=422, detail="family must be petersen or pappus"
            )
        det = determinant(mat)
        rhs = Fraction(req.m, n) if req.m is not None else Fraction(1)
        try:
            solution = solve_all_ones(mat, rhs)
        except SingularMatrixError:
            return models.CirculantVerifyResponse(
                n=n,
                determinant=str(det),
                determinant_nonzero=False,
                solution=[],
                solution_constant=None,
                search=search,
                checks_passed=False,
            )
        constant = solution[0] if all(x == solution[0] for x in solution) else None
        checks = det != 0 and constant == rhs / 3
        return models.CirculantVerifyResponse(
            n=n,
            determinant=str(det),
            determinant_nonzero=det != 0,
            solution=[str(x) for x in solution],
            solution_constant=str(constant) if constant is not None else None,
            search=search,
            checks_passed=checks,
        )

    return app


app = create_app()
