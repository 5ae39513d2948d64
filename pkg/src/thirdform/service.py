"""HTTP service wrapping the analyzer.

POST /analyze, /decompose and /verify-catalog mirror the CLI subcommands;
GET /catalog lists what can be analyzed. Reports are the same dicts the CLI
prints, wrapped in a small typed envelope.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

import numpy as np

from . import __version__, catalog, report, verify
from .classify import AnalysisConfig, analyze
from .errors import ThirdFormError, UnknownName
from .forms import BilinearForm2

__all__ = ["app"]


class AnalyzeRequest(BaseModel):
    entry: str
    params: dict = Field(default_factory=dict)
    samples: int = 25
    seed: int = 0
    tol_cluster: float = 1e-6
    tol_cert: float = 1e-8
    tol_homothety: float = 1e-6
    tol_curvature: float = 1e-5
    margin: float = 0.01
    ricci_step: float | None = None

    def config(self) -> AnalysisConfig:
        return AnalysisConfig(
            samples=self.samples, seed=self.seed,
            tol_cluster=self.tol_cluster, tol_cert=self.tol_cert,
            tol_homothety=self.tol_homothety, tol_curvature=self.tol_curvature,
            margin=self.margin, ricci_step=self.ricci_step,
        )


class AnalyzeResponse(BaseModel):
    kind: str
    definite: bool
    report: dict


class DecomposeRequest(BaseModel):
    a1: list[list[float]]
    a2: list[list[float]]
    tol: float = 1e-8
    seed: int = 0


class DecomposeResponse(BaseModel):
    homothety_r2: float | None
    block_count: int
    report: dict


class VerifyRequest(BaseModel):
    entry_filter: str | None = None
    samples: int = 25
    seed: int = 0
    tol: float = 1e-6


class VerifyResponse(BaseModel):
    passed: bool
    report: dict


class CatalogEntryInfo(BaseModel):
    name: str
    params: dict
    expected_kind: str | None


class CatalogResponse(BaseModel):
    names: list[str]
    default_entries: list[CatalogEntryInfo]


class HealthResponse(BaseModel):
    status: str
    version: str


app = FastAPI(
    title="thirdform",
    version=__version__,
    description="Third fundamental form analysis of submanifolds",
)


def _bad_request(err: Exception) -> HTTPException:
    return HTTPException(status_code=422,
                         detail=f"{type(err).__name__}: {err}")


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/catalog", response_model=CatalogResponse)
def catalog_listing() -> CatalogResponse:
    entries = []
    for e in catalog.default_catalog():
        entries.append(CatalogEntryInfo(
            name=e.name,
            params=dict(e.immersion.params or {}),
            expected_kind=e.expected.get("kind"),
        ))
    return CatalogResponse(names=catalog.entry_names(), default_entries=entries)


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze_entry(req: AnalyzeRequest) -> AnalyzeResponse:
    try:
        entry = catalog.make(req.entry, req.params)
    except UnknownName as err:
        raise HTTPException(status_code=404, detail=str(err)) from err
    except ThirdFormError as err:
        raise _bad_request(err) from err
    try:
        verdict, samples = analyze(entry.immersion, req.config())
    except ThirdFormError as err:
        raise _bad_request(err) from err
    data = report.build_report(verdict, samples, req.config(),
                               entry=req.entry, params=req.params)
    return AnalyzeResponse(kind=verdict.kind, definite=verdict.definite,
                           report=data)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose_form(req: DecomposeRequest) -> DecomposeResponse:
    try:
        form = BilinearForm2(np.asarray(req.a1, dtype=float),
                             np.asarray(req.a2, dtype=float))
        data = report.build_decompose_report(form, tol=req.tol, seed=req.seed)
    except (ThirdFormError, ValueError) as err:
        raise _bad_request(err) from err
    return DecomposeResponse(homothety_r2=data["homothety_r2"],
                             block_count=data["block_count"], report=data)


@app.post("/verify-catalog", response_model=VerifyResponse)
def verify_catalog_route(req: VerifyRequest) -> VerifyResponse:
    try:
        config = AnalysisConfig(samples=req.samples, seed=req.seed)
    except ThirdFormError as err:
        raise _bad_request(err) from err
    data = verify.verify_catalog(config=config, tol=req.tol,
                                 entry_filter=req.entry_filter)
    return VerifyResponse(passed=data["passed"], report=data)
