import pytest

from glab import (
    cyclic_group,
    from_group_action,
    global_action,
    group_bundle,
    pair_groupoid,
)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z2_bundle(z2):
    """The two-element group as a bundle over one unit: C ⊕ C."""
    return group_bundle({"u": z2})


@pytest.fixture(scope="session")
def swap_and_fix(z2):
    """Z/2Z acting on {a, b, c} by swapping a and b: M_2 ⊕ C ⊕ C."""
    action = global_action(
        z2,
        ("a", "b", "c"),
        {"r0": {"a": "a", "b": "b", "c": "c"}, "r1": {"a": "b", "b": "a", "c": "c"}},
    )
    return from_group_action(action, name="swap-and-fix")


@pytest.fixture(scope="session")
def pair2():
    return pair_groupoid((1, 2))


@pytest.fixture(scope="session")
def pair3():
    return pair_groupoid((1, 2, 3))
