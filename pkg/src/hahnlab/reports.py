"""Verification report records shared by every *_check operation."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadDiagnostics:
    evaluations: int
    estimated_error: float

    def to_dict(self) -> dict:
        return {"evaluations": self.evaluations,
                "estimated_error": self.estimated_error}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named check.

    status is "pass" exactly when the measured errors are within the
    tolerance the caller asked for; "error" marks checks that could not
    run to completion.
    """

    name: str
    status: str  # pass | fail | error
    max_abs_err: float
    max_rel_err: float
    details: str = ""
    quad_diagnostics: QuadDiagnostics | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "details": self.details,
        }
        if self.quad_diagnostics is not None:
            out["quad_diagnostics"] = self.quad_diagnostics.to_dict()
        return out


def exact_report(name: str, residual_abs: float, details: str = "") -> VerificationReport:
    """Report for a zero-residual check: pass iff the residual is exactly 0."""
    status = "pass" if residual_abs == 0.0 else "fail"
    return VerificationReport(name, status, residual_abs,
                              float("inf") if residual_abs else 0.0, details)


def toleranced_report(name: str, abs_err: float, rel_err: float,
                      tol_rel: float, tol_abs: float, details: str = "",
                      diagnostics: QuadDiagnostics | None = None) -> VerificationReport:
    ok = rel_err <= tol_rel or abs_err <= tol_abs
    return VerificationReport(name, "pass" if ok else "fail",
                              abs_err, rel_err, details, diagnostics)
