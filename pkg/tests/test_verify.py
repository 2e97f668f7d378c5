from symtaut.verify import run_scope


def test_all_scopes_pass_small_bounds():
    results = run_scope("all", 4, 9)
    failures = [(r.name, r.detail) for r in results if not r.passed]
    assert not failures, failures
    assert all(r.cases > 0 for r in results)


def test_scope_selection():
    names = [r.name for r in run_scope("ring", 2, 5)]
    assert names == [
        "intersection-numbers",
        "gram-nondegenerate",
        "gram-hankel",
        "normal-form",
        "product-laws",
    ]


def test_unknown_scope():
    import pytest

    with pytest.raises(ValueError):
        run_scope("everything", 3, 5)
