"""HTTP facade over every calculation, for the companion UI.

Stateless JSON compute endpoints mirror the library functions one-to-one;
scenario persistence is a single JSON file (this is a desk tool, not a
multi-tenant system).  Validation problems map to 400, infeasible designs to
422, unknown scenarios to 404; every error body is {code, field, message}.

Environment:
    COMPOSITE_DESIGN_PORT       bind port for `python -m composite_design.service`
    COMPOSITE_DESIGN_STORE      path of the scenario store file
    COMPOSITE_DESIGN_UI_ORIGIN  CORS origin allowed to call the API (default *)
"""

from __future__ import annotations

import dataclasses
import os
import threading
import tempfile
import json
import uuid
from datetime import datetime, timezone
from typing import Literal, Optional

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from . import binary as cbe
from .design import are_tte, samplesize_tte, sensitivity_curves
from .effects import effectsize_report
from .errors import DesignError, InfeasibleError
from .law import TTEDesign, calibrate
from .simulate import simulate_cbe, simulate_tte

GRID_CAP = 512
SIMULATION_CAP = 500_000
DEFAULT_RHO_GRID = [round(0.1 * i, 10) for i in range(10)]


class _Body(BaseModel):
    model_config = ConfigDict(extra="forbid")


class TTEBody(_Body):
    p0_e1: float
    p0_e2: float
    hr_e1: float
    hr_e2: float
    rho: float
    beta_e1: float = 1.0
    beta_e2: float = 1.0
    case: int = 1
    copula: str = "frank"
    rho_type: str = "spearman"
    followup_time: float = 1.0
    alpha: float = 0.05
    power: float = 0.80
    ss_formula: str = "schoenfeld"
    subdivisions: int = 1000

    def design(self) -> TTEDesign:
        return TTEDesign(
            p0_e1=self.p0_e1, p0_e2=self.p0_e2, hr_e1=self.hr_e1, hr_e2=self.hr_e2,
            rho=self.rho, beta_e1=self.beta_e1, beta_e2=self.beta_e2, case=self.case,
            copula=self.copula, rho_type=self.rho_type, followup_time=self.followup_time,
        )


class TTECurvesBody(TTEBody):
    grid: int = 100
    rho_grid: Optional[list[float]] = None


class TTESimulateBody(TTEBody):
    sample_size: int
    seed: int


class CBEBody(_Body):
    p0_e1: float
    p0_e2: float
    eff_e1: float
    eff_e2: float
    rho: float
    effm_e1: str = "diff"
    effm_e2: str = "diff"
    effm_ce: str = "diff"
    alpha: float = 0.05
    beta: float = 0.20
    unpooled: bool = True

    def design(self) -> cbe.BinaryDesign:
        return cbe.BinaryDesign(
            p0_e1=self.p0_e1, p0_e2=self.p0_e2, eff_e1=self.eff_e1, eff_e2=self.eff_e2,
            rho=self.rho, effm_e1=self.effm_e1, effm_e2=self.effm_e2,
            effm_ce=self.effm_ce, alpha=self.alpha, beta=self.beta,
            unpooled=self.unpooled,
        )


class CBEProbBody(_Body):
    p1: float
    p2: float
    rho: float = 0.0


class CBEBoundsBody(_Body):
    p1: float
    p2: float


class CBESimulateBody(CBEBody):
    sample_size: int
    seed: int


class ScenarioBody(_Body):
    name: str
    kind: Literal["tte", "cbe"]
    design: dict

    def validate_design(self):
        if self.kind == "tte":
            TTEBody(**self.design).design()
        else:
            CBEBody(**self.design).design()


class ScenarioStore:
    """File-backed scenario records; writes are serialized and atomic."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()

    def _read(self) -> dict:
        if not os.path.exists(self.path):
            return {}
        with open(self.path) as handle:
            return json.load(handle)

    def _write(self, records: dict) -> None:
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(records, handle, indent=1)
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def list(self) -> list[dict]:
        return sorted(self._read().values(), key=lambda r: r["created"])

    def get(self, scenario_id: str) -> dict | None:
        return self._read().get(scenario_id)

    def create(self, payload: dict) -> dict:
        with self._lock:
            records = self._read()
            now = datetime.now(timezone.utc).isoformat()
            record = {"id": uuid.uuid4().hex[:12], "created": now, "modified": now, **payload}
            records[record["id"]] = record
            self._write(records)
            return record

    def update(self, scenario_id: str, payload: dict) -> dict | None:
        with self._lock:
            records = self._read()
            if scenario_id not in records:
                return None
            record = records[scenario_id]
            record.update(payload)
            record["modified"] = datetime.now(timezone.utc).isoformat()
            self._write(records)
            return record

    def delete(self, scenario_id: str) -> bool:
        with self._lock:
            records = self._read()
            if scenario_id not in records:
                return False
            del records[scenario_id]
            self._write(records)
            return True


def _error(status: int, code: str, message: str, field=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "field": field, "message": message},
    )


def _columns_json(columns: dict) -> dict:
    return {name: np.asarray(col).tolist() for name, col in columns.items()}


def create_app(store_path: str | None = None) -> FastAPI:
    store = ScenarioStore(
        store_path or os.environ.get("COMPOSITE_DESIGN_STORE", "scenarios.json")
    )
    app = FastAPI(title="composite-design", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[os.environ.get("COMPOSITE_DESIGN_UI_ORIGIN", "*")],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        field = ".".join(str(loc) for loc in first.get("loc", []) if loc != "body") or None
        return _error(400, "validation", first.get("msg", "malformed request body"), field)

    @app.exception_handler(DesignError)
    async def design_error(request: Request, exc: DesignError):
        if isinstance(exc, InfeasibleError):
            return _error(422, "infeasible", str(exc), exc.field)
        return _error(400, "validation", str(exc), exc.field)

    @app.post("/api/tte/effectsize")
    def tte_effectsize(body: TTEBody):
        report = effectsize_report(body.design(), subdivisions=body.subdivisions)
        return dataclasses.asdict(report)

    @app.post("/api/tte/samplesize")
    def tte_samplesize(body: TTEBody):
        report = samplesize_tte(
            body.design(), body.alpha, body.power, body.ss_formula, body.subdivisions
        )
        return {
            "endpoint1": report.n_endpoint1,
            "endpoint2": report.n_endpoint2,
            "composite": report.n_composite,
            "events_composite": report.events_composite,
            "gahr": report.gahr,
            "alpha": report.alpha,
            "power": report.power,
            "formula": report.formula,
        }

    @app.post("/api/tte/are")
    def tte_are(body: TTEBody):
        return dataclasses.asdict(are_tte(body.design(), body.subdivisions))

    @app.post("/api/tte/curves")
    def tte_curves(body: TTECurvesBody):
        rho_grid = body.rho_grid if body.rho_grid is not None else DEFAULT_RHO_GRID
        if body.grid > GRID_CAP or len(rho_grid) > GRID_CAP:
            raise InfeasibleError(f"grid size capped at {GRID_CAP}", field="grid")
        if body.grid < 2:
            raise InfeasibleError("grid must be at least 2", field="grid")
        design = body.design()
        law = calibrate(design, body.subdivisions)
        curves = law.survival_curves(body.grid)
        hr_time = curves.time.copy()
        hr_time[0] = law.quad.lower_epsilon * law.tau
        sensitivity = sensitivity_curves(
            design, body.alpha, body.power, body.ss_formula, rho_grid, body.subdivisions
        )
        return {
            "survival": _columns_json(curves.columns()),
            "hazard_ratio": {
                "time": hr_time.tolist(),
                "values": np.asarray(law.hr_star(hr_time)).tolist(),
            },
            "are_vs_rho": {
                "rho": sensitivity.rho.tolist(),
                "are": sensitivity.are.tolist(),
            },
            "samplesize_vs_rho": {
                "rho": sensitivity.rho.tolist(),
                "n": sensitivity.n_composite.tolist(),
            },
        }

    @app.post("/api/tte/simulate")
    def tte_simulate(body: TTESimulateBody):
        if body.sample_size > SIMULATION_CAP:
            raise InfeasibleError(
                f"sample_size capped at {SIMULATION_CAP}", field="sample_size"
            )
        trial = simulate_tte(body.design(), body.sample_size, body.seed, body.subdivisions)
        return _columns_json(trial.columns())

    @app.post("/api/cbe/prob")
    def cbe_prob(body: CBEProbBody):
        return {"prob": cbe.prob_cbe(body.p1, body.p2, body.rho)}

    @app.post("/api/cbe/corr-bounds")
    def cbe_bounds(body: CBEBoundsBody):
        return {
            "lower": cbe.lower_corr(body.p1, body.p2),
            "upper": cbe.upper_corr(body.p1, body.p2),
        }

    @app.post("/api/cbe/effectsize")
    def cbe_effectsize(body: CBEBody):
        return dataclasses.asdict(cbe.effectsize_cbe(body.design()))

    @app.post("/api/cbe/samplesize")
    def cbe_samplesize(body: CBEBody):
        return dataclasses.asdict(cbe.samplesize_cbe(body.design()))

    @app.post("/api/cbe/are")
    def cbe_are(body: CBEBody):
        return {"are": cbe.are_cbe(body.design())}

    @app.post("/api/cbe/simulate")
    def cbe_simulate(body: CBESimulateBody):
        if body.sample_size > SIMULATION_CAP:
            raise InfeasibleError(
                f"sample_size capped at {SIMULATION_CAP}", field="sample_size"
            )
        trial = simulate_cbe(body.design(), body.sample_size, body.seed)
        return _columns_json(trial.columns())

    @app.get("/api/scenarios")
    def scenarios_list():
        return store.list()

    @app.post("/api/scenarios", status_code=201)
    def scenarios_create(body: ScenarioBody):
        body.validate_design()
        return store.create(body.model_dump())

    @app.get("/api/scenarios/{scenario_id}")
    def scenarios_get(scenario_id: str):
        record = store.get(scenario_id)
        if record is None:
            return _error(404, "not_found", f"unknown scenario {scenario_id!r}", "id")
        return record

    @app.put("/api/scenarios/{scenario_id}")
    def scenarios_update(scenario_id: str, body: ScenarioBody):
        body.validate_design()
        record = store.update(scenario_id, body.model_dump())
        if record is None:
            return _error(404, "not_found", f"unknown scenario {scenario_id!r}", "id")
        return record

    @app.delete("/api/scenarios/{scenario_id}", status_code=204)
    def scenarios_delete(scenario_id: str):
        if not store.delete(scenario_id):
            return _error(404, "not_found", f"unknown scenario {scenario_id!r}", "id")

    return app


def main() -> None:
    import uvicorn

    port = int(os.environ.get("COMPOSITE_DESIGN_PORT", "8710"))
    uvicorn.run(create_app(), host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
