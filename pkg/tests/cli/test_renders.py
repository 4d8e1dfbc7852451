def _report(**kwargs):
    from reciprocity_laws.cli.data import CommandReport

    return CommandReport(command="tame", field="q", **kwargs)


def test_json_renderer():
    import json

    from reciprocity_laws.renders import get_renderer
    from reciprocity_laws.constants import RenderType

    text = get_renderer(RenderType.json).render(_report(inputs=["t", "t"], value="-1"))
    payload = json.loads(text)
    assert payload["inputs"] == ["t", "t"]
    assert payload["value"] == "-1"
    assert payload["passed"] is None


def test_json_renderer_error_only():
    import json

    from reciprocity_laws.cli.data import Diagnostic
    from reciprocity_laws.renders import get_renderer
    from reciprocity_laws.constants import RenderType

    error = Diagnostic(kind="UsageException", message="unknown field")
    payload = json.loads(get_renderer(RenderType.json).render(_report(error=error)))
    assert payload == {"error": {"kind": "UsageException", "message": "unknown field", "line": None, "column": None}}


def test_text_renderer():
    from reciprocity_laws.cli.data import Diagnostic
    from reciprocity_laws.renders import get_renderer
    from reciprocity_laws.constants import RenderType

    renderer = get_renderer(RenderType.text)
    text = renderer.render(_report(inputs=["t", "t"], value="-1", details={"at": "(t)"}))
    assert text.splitlines() == ["tame over q", "inputs: t, t", "value: -1", "  at = (t)"]

    error = Diagnostic(kind="ExpressionSyntaxException", message="oops", line=1, column=4)
    assert renderer.render(_report(error=error)) == "error: ExpressionSyntaxException at line 1, column 4: oops"
