import pytest
from hypothesis import given
from hypothesis import strategies as st

from metricdim.errors import InvalidParameter, SingleBlockError
from metricdim.formulas import (
    THEOREMS,
    FamilyInstance,
    bounds_edge_amal_cycle,
    build_amalgam,
    dim_formula_base,
    is_complete_vertex_boundary,
    poisson_zhang_lower_bound,
    thm_edge_amal_complete,
    thm_edge_amal_prism,
    thm_vertex_amal_complete,
    thm_vertex_amal_cycle,
    thm_vertex_amal_prism,
    witness_edge_amal_complete,
    witness_edge_amal_prism,
    witness_vertex_amal_complete,
    witness_vertex_amal_prism,
)
from metricdim.graph_core import all_pairs_distances, make_complete, make_cycle, make_path, make_prism
from metricdim.resolving import class_lower_bound, distance_similar_partition, find_collision, is_resolving
from metricdim.solver import metric_dimension_exact
from metricdim.verify import enumerate_instances


def witness(theorem, sizes):
    thm = THEOREMS[theorem]
    inst = FamilyInstance.create(thm.family, thm.mode, sizes)
    g, lab = build_amalgam(inst)
    return thm.witness(inst, lab), all_pairs_distances(g), lab


def test_base_dims():
    assert dim_formula_base("K", 5) == 4
    assert dim_formula_base("P", 7) == 1
    assert dim_formula_base("C", 7) == 2
    assert dim_formula_base("Pr", 4) == 3
    assert dim_formula_base("Pr", 5) == 2
    for fam, bad in [("K", 1), ("P", 1), ("C", 2), ("Pr", 2), ("X", 3)]:
        with pytest.raises(InvalidParameter):
            dim_formula_base(fam, bad)


@pytest.mark.parametrize("p", range(3, 9))
def test_prism_base_dims_pinned_by_search(p):
    assert metric_dimension_exact(make_prism(p)).dim == dim_formula_base("Pr", p)


@pytest.mark.parametrize("family, make, sizes", [
    ("K", make_complete, range(2, 8)), ("C", make_cycle, range(3, 11)), ("P", make_path, range(2, 11)),
])
def test_base_dims_match_search(family, make, sizes):
    for s in sizes:
        assert metric_dimension_exact(make(s)).dim == dim_formula_base(family, s)


def test_poisson_zhang():
    assert poisson_zhang_lower_bound(4, 4) == 6
    assert poisson_zhang_lower_bound(1, 1) == 0
    assert poisson_zhang_lower_bound(3, 4) == 5
    with pytest.raises(InvalidParameter):
        poisson_zhang_lower_bound(0, 2)


def test_cycle_formulas():
    assert thm_vertex_amal_cycle([3, 5, 7]).value == 3
    assert thm_vertex_amal_cycle([3, 5, 7]).case == "ne=0"
    assert thm_vertex_amal_cycle([4, 6]).value == 3
    assert thm_vertex_amal_cycle([3, 4]).value == 2
    r = bounds_edge_amal_cycle([4, 4])
    assert (r.kind, r.lower, r.upper) == ("bounds", 1, 2)
    assert (bounds_edge_amal_cycle([5, 5, 5]).lower, bounds_edge_amal_cycle([5, 5, 5]).upper) == (1, 3)
    assert (bounds_edge_amal_cycle([6] * 4).lower, bounds_edge_amal_cycle([6] * 4).upper) == (2, 4)
    with pytest.raises(InvalidParameter):
        bounds_edge_amal_cycle([4, 4]).value


def test_complete_vertex_formula():
    assert thm_vertex_amal_complete([2, 2, 2]).value == 2
    assert thm_vertex_amal_complete([2, 2, 2]).case == "n2>=2"
    assert thm_vertex_amal_complete([5, 3, 4]).value == 6
    assert thm_vertex_amal_complete([3, 4, 5]).case == "n2=0"
    assert thm_vertex_amal_complete([2, 3]).value == 1
    assert thm_vertex_amal_complete([2, 3]).case == "n2=1"


def test_complete_vertex_witness():
    s, _, _ = witness("complete-vertex", [2, 2, 2])
    assert s == (1, 2)  # leaves of the first two K2 blocks
    s, d, _ = witness("complete-vertex", [3, 4, 5])
    assert len(s) == 6 and is_resolving(d, s)
    s, d, lab = witness("complete-vertex", [2, 3])
    assert s == (lab.global_id(1, "v1"),)
    # the proof's set leaves c and v_2 of the K3 block both at distance 1
    assert find_collision(d, s) == (0, lab.global_id(1, "v2"))


def test_complete_edge_formula():
    assert thm_edge_amal_complete([4, 4]).value == 3
    assert thm_edge_amal_complete([4, 4]).case == "n3=0"
    assert thm_edge_amal_complete([3, 5]).value == 4
    assert thm_edge_amal_complete([3, 5]).case == "n3=1,n=2"
    assert thm_edge_amal_complete([3, 3, 3]).value == 3
    assert thm_edge_amal_complete([3, 3, 3]).case == "n3=n"
    assert thm_edge_amal_complete([3, 4, 4]).value == 3
    assert thm_edge_amal_complete([3, 4, 4]).case == "otherwise"
    with pytest.raises(InvalidParameter):
        thm_edge_amal_complete([2, 4])


def test_complete_edge_witness():
    s, d, _ = witness("complete-edge", [4, 4])
    assert s == (0, 2, 4)  # c1, v_1 of each block
    s, d, _ = witness("complete-edge", [3, 3, 3])
    assert s == (0, 2, 3)
    s, d, lab = witness("complete-edge", [3, 4, 4])
    assert s == (0, lab.global_id(1, "v1"), lab.global_id(2, "v1"))
    assert is_resolving(d, s)
    s, d, _ = witness("complete-edge", [3, 5])
    assert len(s) == 4 and is_resolving(d, s)


def test_rest_case_needs_amended_v0():
    # with V_0 kept whole, the set has one vertex more than the dimension
    s, d, lab = witness("complete-edge", [3, 3, 4])
    dropped = lab.global_id(1, "v1")
    assert dropped not in s and is_resolving(d, s)
    assert len(s) == thm_edge_amal_complete([3, 3, 4]).value == metric_dimension_exact(d).dim
    assert len(set(s) | {dropped}) == len(s) + 1


def test_prism_vertex_formula():
    assert thm_vertex_amal_prism([4, 6]).value == 4
    assert thm_vertex_amal_prism([3, 5]).value == 3
    assert thm_vertex_amal_prism([3, 4, 5]).value == 5


def test_prism_vertex_witness():
    s, d, lab = witness("prism-vertex", [4, 6])
    g = lab.global_id
    assert s == tuple(sorted((g(0, "u2"), g(0, "v2"), g(1, "u3"), g(1, "v3"))))
    s, d, lab = witness("prism-vertex", [3, 5])
    g = lab.global_id
    assert s == tuple(sorted((g(0, "v2"), g(1, "u3"), g(1, "v3"))))
    assert is_resolving(d, s)
    s, d, lab = witness("prism-vertex", [4, 5])
    g = lab.global_id
    assert s == tuple(sorted((g(0, "u2"), g(0, "v2"), g(1, "v3"))))
    # hand check: v_4 of the Pr4 block and u_1 of the Pr5 block are both (3, 2, 3)
    assert find_collision(d, s) == (g(0, "v4"), g(1, "u1"))


def test_prism_edge_formula():
    assert thm_edge_amal_prism([3, 4]).value == 3
    assert thm_edge_amal_prism([4, 6]).value == 3
    assert thm_edge_amal_prism([3, 3, 5]).value == 5


def test_prism_edge_witness():
    s, d, lab = witness("prism-edge", [3, 4])
    g = lab.global_id
    assert s == tuple(sorted((g(1, "u2"), g(1, "v2"), g(0, "v2"))))
    assert is_resolving(d, s)
    s, d, lab = witness("prism-edge", [3, 5])
    g = lab.global_id
    assert s == tuple(sorted((g(1, "v3"), g(1, "u1"), g(0, "v2"))))
    assert witness("prism-edge", [4, 6])[0] is None


def test_single_block_rejected():
    for f in (thm_vertex_amal_cycle, thm_vertex_amal_prism, thm_edge_amal_prism):
        with pytest.raises(SingleBlockError):
            f([5])


def test_labeling_mismatch_rejected():
    inst = FamilyInstance.create("K", "vertex", [3, 4])
    _, lab = build_amalgam(FamilyInstance.create("K", "vertex", [3, 5]))
    with pytest.raises(InvalidParameter):
        witness_vertex_amal_complete(inst, lab)


def test_boundary_family():
    assert is_complete_vertex_boundary(FamilyInstance.create("K", "vertex", [2, 5]))
    assert not is_complete_vertex_boundary(FamilyInstance.create("K", "vertex", [2, 3, 3]))
    assert not is_complete_vertex_boundary(FamilyInstance.create("K", "vertex", [2, 2, 3]))


# -- properties ----------------------------------------------------------------

_CASES = {
    "cycle-vertex": {"ne=0": lambda i: i.ne == 0, "ne>=1": lambda i: i.ne >= 1},
    "cycle-edge": {"bounds": lambda i: True},
    "complete-vertex": {"n2>=2": lambda i: i.n2 >= 2, "n2=1": lambda i: i.n2 == 1, "n2=0": lambda i: i.n2 == 0},
    "complete-edge": {
        "n3=0": lambda i: i.n3 == 0,
        "n3=1,n=2": lambda i: i.n3 == 1 and i.n == 2,
        "n3=n": lambda i: i.n3 == i.n,
        "otherwise": lambda i: 0 < i.n3 < i.n and not (i.n3 == 1 and i.n == 2),
    },
    "prism-vertex": {"no=0": lambda i: i.no == 0, "no>=1": lambda i: i.no >= 1},
    "prism-edge": {"no=0": lambda i: i.no == 0, "no>=1": lambda i: i.no >= 1},
}


@given(st.sampled_from(sorted(THEOREMS)), st.lists(st.integers(0, 12), min_size=2, max_size=7))
def test_case_dispatch_total_and_exclusive(key, raw):
    thm = THEOREMS[key]
    lo = 2 if (thm.family, thm.mode) == ("K", "vertex") else 3
    inst = FamilyInstance.create(thm.family, thm.mode, [lo + x for x in raw])
    result = thm.formula(inst.sizes)
    fired = [c for c, pred in _CASES[key].items() if pred(inst)]
    assert fired == [result.case]
    assert result.lower <= result.upper


@given(st.lists(st.integers(3, 40), min_size=2, max_size=10))
def test_edge_prism_formula_is_2n_minus_1(sizes):
    assert thm_edge_amal_prism(sizes).value == 2 * len(sizes) - 1


_SWEEP = [
    ("complete-vertex", range(2, 7), 4, 16), ("complete-edge", range(3, 7), 3, 16),
    ("prism-vertex", range(3, 7), 3, None), ("prism-edge", range(3, 7), 3, None),
]


@pytest.mark.parametrize("key, sizes, max_n, max_v", _SWEEP)
def test_witness_size_matches_formula(key, sizes, max_n, max_v):
    thm = THEOREMS[key]
    for inst in enumerate_instances(key, sizes, max_n, max_vertices=max_v):
        _, lab = build_amalgam(inst)
        s = thm.witness(inst, lab)
        if s is not None:
            assert len(s) == thm.formula(inst.sizes).value, inst


@pytest.mark.parametrize("key, sizes, max_n, max_v", _SWEEP + [("cycle-vertex", range(3, 9), 3, None)])
def test_formula_within_trivial_bounds(key, sizes, max_n, max_v):
    thm = THEOREMS[key]
    for inst in enumerate_instances(key, sizes, max_n, max_vertices=max_v):
        g, _ = build_amalgam(inst)
        lb = class_lower_bound(distance_similar_partition(all_pairs_distances(g)))
        assert g.n == inst.order()
        assert lb <= thm.formula(inst.sizes).value <= g.n - 1, inst
