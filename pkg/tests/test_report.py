"""Report rendering: stable field names and byte-identical determinism."""
from gabrielq.report import Report


def build(seed):
    r = Report("verify", {"suite": "demo", "seed": seed})
    r.check("first", True, value=7)
    r.check("second", False, value="x + y", why="demo")
    r.note("extra", 3)
    return r


def test_counts_and_ok():
    r = build(1)
    assert r.passed == 1 and r.failed == 1 and not r.ok
    assert [c["name"] for c in r.violations()] == ["second"]


def test_render_layout():
    text = build(1).render()
    lines = text.splitlines()
    assert lines[0] == "command: verify"
    assert "check[1].name: first" in lines
    assert "check[1].status: pass" in lines
    assert "check[2].status: FAIL" in lines
    assert "extra: 3" in lines
    assert lines[-1] == "summary.verdict: FAIL"
    assert text.endswith("\n")


def test_byte_identical():
    assert build(5).render() == build(5).render()


def test_all_pass_verdict():
    r = Report("unit", {})
    r.check("only", True)
    assert r.render().splitlines()[-1] == "summary.verdict: pass"
