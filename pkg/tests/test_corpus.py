from frcodes import CORPUS_NAMES, corpus, validate


def test_corpus_names_and_shapes():
    codes = corpus()
    assert tuple(codes) == CORPUS_NAMES == ("table1", "table2", "table3", "m11x8")
    shapes = {name: (c.n, c.theta, c.rho) for name, c in codes.items()}
    assert shapes == {
        "table1": (7, 8, 3),
        "table2": (5, 9, 2),
        "table3": (5, 8, 2),
        "m11x8": (11, 8, 3),
    }


def test_corpus_spot_values():
    codes = corpus()
    assert codes["table1"].nodes[0] == frozenset({1, 6, 7, 8})
    assert codes["m11x8"].nodes[4] == frozenset({1, 2, 3, 4})
    assert codes["table3"].nodes[4] == frozenset({6})


def test_corpus_replication_totals():
    # table3 is deliberately irregular: packet 5 is stored only once
    reports = {name: validate(code) for name, code in corpus().items()}
    assert {name: r.ok for name, r in reports.items()} == {
        "table1": True,
        "table2": True,
        "table3": False,
        "m11x8": True,
    }
    assert {name: r.eq1_residual for name, r in reports.items()} == {
        "table1": 0,
        "table2": 0,
        "table3": -1,
        "m11x8": 0,
    }


def test_corpus_returns_fresh_mapping():
    first = corpus()
    first["table1"] = None
    assert corpus()["table1"] is not None
