from typing import TYPE_CHECKING
from typing_extensions import override

from .base import BaseRenderer

if TYPE_CHECKING:
    from ..cli.data import SurveySummary, CommandReport
    from ..verifiers import ReciprocityReport


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


class TextRenderer(BaseRenderer):
    """给人看的纯文本输出"""

    @override
    def render(self, report: "CommandReport") -> str:
        if (error := report.error) is not None:
            where = f" at line {error.line}, column {error.column}" if error.line is not None else ""
            return f"error: {error.kind}{where}: {error.message}"

        lines = [f"{report.command} over {report.field}"]
        if report.modulus:
            lines[0] += f" (modulus {report.modulus})"
        if report.inputs:
            lines.append("inputs: " + ", ".join(report.inputs))
        if report.value is not None:
            lines.append(f"value: {report.value}")
        lines.extend(f"  {piece}: {value}" for piece, value in report.values.items())
        lines.extend(f"  {key} = {value}" for key, value in report.details.items())
        if report.report is not None:
            lines.extend(self._check(report.report))
        if report.survey is not None:
            lines.extend(self._survey(report.survey))
        return "\n".join(lines)

    def _check(self, report: "ReciprocityReport") -> list[str]:
        cert = report.certificate
        trivial = sum(check.trivial for check in cert.spot_checks)
        lines = [f"{report.law}: {_verdict(report.passed)}", f"aggregate: {report.aggregate}"]
        lines.extend(f"  {key}: {value}" for key, value in report.context.items())
        lines.append(f"spot checks: {trivial}/{len(cert.spot_checks)} trivial outside the support")
        return lines

    def _survey(self, survey: "SurveySummary") -> list[str]:
        lines = [f"{survey.law}: {survey.passed}/{survey.count} passed"]
        lines.extend("  failed: " + ", ".join(inputs) for inputs in survey.failed)
        return lines
