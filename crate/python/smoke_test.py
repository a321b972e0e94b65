"""Smoke test for the Python bindings.

Build and install the extension first:

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/nothree-*.whl
"""

import nothree


def main():
    pts = nothree.parabola_points(5)
    assert pts == [(0, 0), (1, 1), (2, 4), (3, 4), (4, 1)], pts
    assert nothree.in_general_position(pts)
    assert nothree.find_collinear([(0, 0), (1, 1), (2, 2)]) == ((0, 0), (1, 1), (2, 2))
    assert nothree.find_collinear(pts, brute=True) is None
    assert nothree.line_through((0, 0), (2, 4)) == (2, -1, 0)

    assert nothree.fit_parabola(5, (0, 0), (1, 1)) == (0, 0)
    try:
        nothree.parabola_points(9)
    except ValueError:
        pass
    else:
        raise AssertionError("composite modulus accepted")

    assert nothree.greedy_points(5, "lexle") == [(1, 1), (2, 1), (3, 2), (4, 2), (5, 5)]
    report = nothree.table1_check("fast", [100, 200, 300])
    assert report["lex_match"] == "lexle", report["lex_match"]

    points, squares = nothree.build_extensible(0.5, 24.0, 16)
    assert nothree.in_general_position(points)
    assert [s["n"] for s in squares] == [13, 14, 15, 16]
    for s in squares:
        assert s["tally_sum"] == s["p"] * s["red_total"] + s["blue_total"]
    rows = nothree.density(points, [2**13, 2**16])
    assert rows[0][:2] == (8192, 1)

    assert nothree.is_prime(2**61 - 1)
    assert nothree.prev_prime(10) == 7
    assert nothree.check_claim_sum(20, 0.5)["holds"]
    assert nothree.bhp_gap_holds(2**20)
    print(f"ok: {len(points)} extensible points, {len(squares)} squares")


if __name__ == "__main__":
    main()
