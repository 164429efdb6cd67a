"""FastAPI front end for the certificate pipelines.

Domain errors map to HTTP 400 with a tagged detail ({"error": "usage"} or
{"error": "data"}); an exhausted prime search is a legitimate outcome and
comes back as a 200 report whose payload carries "search_error".
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import demo, numtheory
from ..invariants import (InvariantProfile, LocalExtensionData,
                          contains_subfield, profile_degree, profile_violations)
from ..numtheory import SearchBudget, SearchBudgetExceeded
from ..reporting import CheckResult, all_pass, checks_to_json
from ..witness_deg8 import build_deg8_witness
from ..witness_psq import build_psq_witness
from .schemas import (Deg8Request, MnDemoRequest, ProfileCheckRequest,
                      PsqRequest, Report)


def _usage(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"error": "usage", "message": message})


def _bad_data(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"error": "data", "message": message})


def create_app() -> FastAPI:
    app = FastAPI(
        title="noncrossed certificate service",
        description="Machine-checkable certificates for noncrossed product "
                    "division algebra constructions",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/witness/psq", response_model=Report)
    def witness_psq(req: PsqRequest) -> Report:
        if req.p == 2 or not numtheory.is_prime(req.p):
            raise _usage(f"p must be an odd prime, got {req.p}")
        budget = SearchBudget(req.budget) if req.budget else None
        try:
            witness = build_psq_witness(req.p, budget)
        except SearchBudgetExceeded as exc:
            return Report(kind="psq", all_pass=False,
                          payload={"p": req.p, "search_error": str(exc)})
        return Report(kind="psq", all_pass=witness.all_pass,
                      payload=witness.to_json())

    @app.post("/witness/deg8", response_model=Report)
    def witness_deg8(req: Deg8Request) -> Report:
        if not numtheory.is_prime(req.p) or req.p % 8 != 3:
            raise _usage(
                f"p must be a prime congruent to 3 mod 8, got {req.p} "
                f"({req.p} is {req.p % 8} mod 8)" if numtheory.is_prime(req.p)
                else f"p must be a prime congruent to 3 mod 8, got {req.p}")
        witness = build_deg8_witness(req.p)
        return Report(kind="deg8", all_pass=witness.all_pass,
                      payload=witness.to_json())

    @app.post("/mn-demo", response_model=Report)
    def mn_demo(req: MnDemoRequest) -> Report:
        payload = demo.run_demo(samples=req.samples, seed=req.seed)
        return Report(kind="mn-demo", all_pass=payload["all_pass"], payload=payload)

    @app.post("/check-profile", response_model=Report)
    def check_profile(req: ProfileCheckRequest) -> Report:
        try:
            profile = InvariantProfile.from_json(req.profile)
        except ValueError as exc:
            raise _bad_data(str(exc)) from exc
        violations = profile_violations(profile)
        checks = [CheckResult(
            "profile-valid", not violations,
            "realized by a central division algebra" if not violations
            else "; ".join(violations))]
        payload = {"profile": profile.to_json()}
        if not violations:
            payload["degree"] = profile_degree(profile)
        if req.extension is not None:
            try:
                ext = LocalExtensionData.from_json(req.extension, profile.base)
                verdict = contains_subfield(profile, ext, ext.base_degree)
            except ValueError as exc:
                raise _bad_data(str(exc)) from exc
            payload["containment"] = verdict.to_json()
            checks.append(CheckResult(
                "contains-subfield", verdict.contained,
                f"LCM of base-changed invariant orders is {verdict.lcm_of_orders}"))
        payload["checks"] = checks_to_json(checks)
        return Report(kind="profile-check", all_pass=all_pass(checks),
                      payload=payload)

    return app


app = create_app()
