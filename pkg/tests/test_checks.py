import pytest

from twisted_bruhat import checks
from twisted_bruhat.groups import GroupContext


@pytest.mark.parametrize("model", ["flip:4", "flip:6", "diagonal:3", "diagonal:4"])
def test_all_suites_exhaustive(model):
    sess = checks.Session(GroupContext.parse(model), "exhaustive")
    results = checks.run_suites(checks.SUITES, sess)
    for r in results:
        assert r.passed, (r.name, r.failures[:3])
        assert r.checked > 0 or r.skipped
    skipped = {r.name for r in results if r.skipped}
    assert skipped == ({"oracle"} if model.startswith("flip") else {"epsilon"})


def test_fast_level_samples_and_keeps_top():
    sess = checks.Session(GroupContext.flip(8), "fast")
    targets = sess.targets()
    assert len(targets) < sess.poset.size and targets[-1] == sess.poset.top
    for name in ("edges", "qsum", "equivalences"):
        assert checks.run_suite(name, sess).passed


def test_bad_level_and_suite():
    with pytest.raises(ValueError):
        checks.Session(GroupContext.flip(4), "thorough")
    with pytest.raises(KeyError):
        checks.run_suite("nope", checks.Session(GroupContext.flip(4)))


def test_summary_lines():
    r = checks.SuiteResult("qsum", "flip:4", checked=3)
    assert "PASS" in r.summary()
    r.fail("x")
    assert "FAIL" in r.summary() and not r.passed
    for _ in range(2 * checks.MAX_FAILURES):
        r.fail("y")
    assert len(r.failures) == checks.MAX_FAILURES
