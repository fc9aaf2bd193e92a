import json

import berge


def test_bounds():
    assert berge.f(20, 10, 3, 4) == 104
    assert berge.f(8, 6, 3, 2) == 14
    assert berge.fstar(8, 6, 3, 2) == 8
    assert berge.hsp(6, 1, 3, 2) == 12
    try:
        berge.main_cycle_bound(3, 5, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-domain bound accepted")


def test_constructions():
    h = berge.build_hcal(8, 6, 3, 2)
    assert len(h) == 14
    assert h.is_sperner() and h.is_two_connected()
    assert h.circumference() == 5
    assert len(berge.build_hnka(14, 11, 3)) == 46
    assert berge.Hypergraph.from_json(h.to_json()) == h


def test_search_and_shrink():
    h = berge.Hypergraph(6, 3, [[0, 1, 2], [0, 3], [1, 4], [2, 5], [3, 4], [4, 5]])
    length, base, edges = h.longest_cycle()
    assert length == 5 and len(base) == 5 and len(edges) == 5
    trace = json.loads(berge.reduce_to_happy(h, 6))
    assert [s["params"]["kind"] for s in trace["steps"]] == ["T2"]
    assert trace["terminal"]["terminal"] == "happy"


def test_verify():
    csv = berge.verify("main2conn", 5, [4, 5], [3])
    rows = csv.strip().splitlines()
    assert rows[0] == "theorem,n,k,r,extremal,bound,status"
    assert all(r.endswith(",holds") for r in rows[1:])
    m, w = berge.extremal_number(5, 4, 3, "path")
    assert m == 5 and len(w) == 5


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
    print("smoke ok")
