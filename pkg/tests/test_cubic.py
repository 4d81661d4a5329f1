import itertools
import random

import pytest

from nbcolor.balance import is_3_balanced, normalize_coloring, solve_3_balanced
from nbcolor.cubic import (
    FORBIDDEN_PATTERNS,
    CharacterizationFailsError,
    CubicDataset,
    InvalidDatasetError,
    NotCubicError,
    NotTaitError,
    alternating_cycle_cover,
    alternating_sum,
    check_sum_characterization,
    dataset_from_colored_graph,
    enumerate_cycles,
    forbidden_scan,
    graph_from_dataset,
    induced_edge_coloring,
    is_tait,
    matchings_from_edge_coloring,
    reconstruct_vertex_coloring,
    tait_coloring_exists,
)
from nbcolor.families import gen_petersen
from nbcolor.graphs import SizeLimitExceeded, canonical_form, from_edges

PRISM = from_edges(
    6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
)
K4 = from_edges(4, list(itertools.combinations(range(4), 2)))
HEX_PRISM = gen_petersen(6, 1)


def tietze():
    """Petersen with one vertex expanded into a triangle."""
    petersen = gen_petersen(5, 2)
    nbrs = sorted(petersen.adj[0])
    edges = [(u, v) for u, v in petersen.edges() if 0 not in (u, v)]
    edges += [(10, 11), (11, 12), (10, 12)]
    edges += [(10 + i, nbrs[i]) for i in range(3)]
    keep = sorted({u for e in edges for u in e})
    relabel = {v: i for i, v in enumerate(keep)}
    return from_edges(12, [(relabel[u], relabel[v]) for u, v in edges])


# -- induced edge colorings --------------------------------------------------

def test_induced_edge_labels():
    ec = induced_edge_coloring(K4, [1, 2, 0, 0])
    assert ec[(0, 1)] == 0
    assert ec[(0, 2)] == 1
    assert ec[(2, 3)] == 0
    ec = induced_edge_coloring(PRISM, solve_3_balanced(PRISM))
    assert is_tait(PRISM, ec)


def test_constant_coloring_not_tait():
    ec = induced_edge_coloring(PRISM, [0] * 6)
    assert set(ec.values()) == {0}
    assert not is_tait(PRISM, ec)


def test_is_tait_requires_full_cover():
    ec = induced_edge_coloring(PRISM, solve_3_balanced(PRISM))
    del ec[(0, 1)]
    with pytest.raises(ValueError):
        is_tait(PRISM, ec)


def test_induced_requires_cubic():
    with pytest.raises(NotCubicError):
        induced_edge_coloring(from_edges(3, [(0, 1)]), [0, 0, 0])


# -- Tait search -------------------------------------------------------------

def test_tait_existence():
    assert tait_coloring_exists(PRISM)
    assert tait_coloring_exists(K4)
    assert not tait_coloring_exists(gen_petersen(5, 2))
    assert not tait_coloring_exists(tietze())


def test_matchings_partition_edges():
    ec = induced_edge_coloring(HEX_PRISM, solve_3_balanced(HEX_PRISM))
    matchings = matchings_from_edge_coloring(HEX_PRISM, ec)
    assert [len(m) for m in matchings] == [6, 6, 6]
    seen = set()
    for matching in matchings:
        covered = set()
        for u, v in matching:
            assert u not in covered and v not in covered
            covered.update((u, v))
        seen.update(matching)
    assert seen == set(HEX_PRISM.edges())


def test_matchings_reject_improper():
    with pytest.raises(NotTaitError):
        matchings_from_edge_coloring(PRISM, induced_edge_coloring(PRISM, [0] * 6))


# -- cycle structure ---------------------------------------------------------

def test_alternating_cover_even_cycles():
    coloring = solve_3_balanced(HEX_PRISM)
    ec = induced_edge_coloring(HEX_PRISM, coloring)
    for pair in ((0, 1), (0, 2), (1, 2)):
        cycles = alternating_cycle_cover(HEX_PRISM, ec, pair)
        covered = [v for cycle in cycles for v in cycle]
        assert sorted(covered) == list(range(12))
        for cycle in cycles:
            assert len(cycle) % 2 == 0


def test_enumerate_cycles_counts():
    c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert len(enumerate_cycles(c4)) == 1
    # K4 carries four triangles and three quadrilaterals
    assert len(enumerate_cycles(K4)) == 7
    with pytest.raises(SizeLimitExceeded):
        enumerate_cycles(from_edges(15, [(0, 1)]))


def test_alternating_sum_parity_law():
    # sum with alternating signs is 2*l(start) on odd cycles, 0 on even ones
    coloring = solve_3_balanced(HEX_PRISM)
    ec = induced_edge_coloring(HEX_PRISM, coloring)
    for cycle in enumerate_cycles(HEX_PRISM):
        k = len(cycle)
        s = alternating_sum(cycle, ec)
        expected = (1 + (-1) ** (k - 1)) * coloring[cycle[0]] % 3
        assert s == expected


def test_check_sum_characterization():
    ec = induced_edge_coloring(PRISM, solve_3_balanced(PRISM))
    assert check_sum_characterization(PRISM, ec)


def test_k4_tait_colorings_all_fail_characterization():
    # K4 has Tait colorings but no balanced coloring, so every one must
    # fail the cycle-sum test; brute force all proper 3-edge-colorings
    edges = list(K4.edges())
    found = 0
    for assignment in itertools.product(range(3), repeat=len(edges)):
        ec = dict(zip(edges, assignment))
        if not is_tait(K4, ec):
            continue
        found += 1
        assert not check_sum_characterization(K4, ec)
    assert found > 0


def test_reconstruction_round_trip():
    for g in (PRISM, HEX_PRISM):
        coloring = solve_3_balanced(g)
        ec = induced_edge_coloring(g, coloring)
        rebuilt = reconstruct_vertex_coloring(g, ec)
        assert rebuilt == coloring
        assert is_3_balanced(g, rebuilt)


def test_reconstruction_rejects_bad_tait():
    edges = list(K4.edges())
    for assignment in itertools.product(range(3), repeat=len(edges)):
        ec = dict(zip(edges, assignment))
        if is_tait(K4, ec):
            with pytest.raises(CharacterizationFailsError):
                reconstruct_vertex_coloring(K4, ec)
            break


# -- datasets ----------------------------------------------------------------

def test_dataset_round_trip():
    coloring = solve_3_balanced(HEX_PRISM)
    ds = dataset_from_colored_graph(HEX_PRISM, coloring)
    ds.validate()
    assert sorted(len(p) for p in ds.parts) == [4, 4, 4]
    rebuilt, rebuilt_coloring = graph_from_dataset(ds)
    assert canonical_form(rebuilt) == canonical_form(HEX_PRISM)
    assert is_3_balanced(rebuilt, rebuilt_coloring)


def test_dataset_validation_rejects_bad_shapes():
    ds = CubicDataset(parts=((0, 1), (2, 3), (4,)), maps={})
    with pytest.raises(InvalidDatasetError):
        ds.validate()
    ds = CubicDataset(parts=((0,), (1,), (2,)), maps={})
    with pytest.raises(InvalidDatasetError):
        ds.validate()  # odd part size


def test_dataset_diagonal_must_be_fixed_point_free():
    coloring = solve_3_balanced(HEX_PRISM)
    ds = dataset_from_colored_graph(HEX_PRISM, coloring)
    broken = dict(ds.maps)
    part0 = ds.parts[0]
    broken[0, 0] = {v: v for v in part0}
    with pytest.raises(InvalidDatasetError):
        CubicDataset(parts=ds.parts, maps=broken).validate()


def test_dataset_inverse_pairing():
    coloring = solve_3_balanced(HEX_PRISM)
    ds = dataset_from_colored_graph(HEX_PRISM, coloring)
    for i in range(3):
        for j in range(3):
            forward = ds.maps[i, j]
            backward = ds.maps[j, i]
            for u, v in forward.items():
                assert backward[v] == u


# -- forbidden patterns ------------------------------------------------------

def test_pattern_shapes():
    assert set(FORBIDDEN_PATTERNS) == {"D", "EB", "F1", "F2", "F3", "F4"}


def test_scan_known_graphs():
    scan = forbidden_scan(K4)
    assert "D" in scan.patterns and scan.any_hit
    clean = forbidden_scan(PRISM)
    assert not clean.patterns and not clean.has_bridge and not clean.any_hit


def test_scan_detects_bridge():
    barbell = from_edges(
        7,
        [(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6), (2, 3), (3, 4)],
    )
    assert forbidden_scan(barbell).has_bridge


def test_each_pattern_detects_itself():
    for name, pattern in FORBIDDEN_PATTERNS.items():
        assert name in forbidden_scan(pattern).patterns
