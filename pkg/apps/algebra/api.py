"""秩定理与全套校验 API。"""

from ninja_extra import ControllerBase, api_controller, route

from apps.core.api.responses import success_response

from .schemas import CheckReportSchema, SuiteReportSchema, SuiteRequestSchema, TheoremRequestSchema
from .services import run_suite, verify_theorem


@api_controller("/verify", tags=["校验"])
class VerifyController(ControllerBase):
    @route.post("/theorem")
    def theorem(self, payload: TheoremRequestSchema):
        report = verify_theorem(payload.k, payload.target.to_domain())
        return success_response(data=CheckReportSchema.from_domain(report))

    @route.post("/suite")
    def suite(self, payload: SuiteRequestSchema):
        report = run_suite(payload.target.to_domain(), payload.k, strict=payload.strict)
        return success_response(data=SuiteReportSchema.from_domain(report))


__all__ = ["VerifyController"]
