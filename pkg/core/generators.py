"""
Synthetic instance generators.

Used by the round-count study and the property tests. Random instances
are drawn from a hidden binary assignment, so they are never contradictory.
"""

from typing import List

import numpy as np

from .models import Difference, Exclusion, Inclusion, SCPInstance


def _names(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(count)]


def random_instance(rng: np.random.Generator, n_elements: int, n_sets: int,
                    n_constraints: int) -> SCPInstance:
    """
    Draw a non-contradictory instance.

    A hidden membership grid is drawn first; every constraint is read off
    that grid, so all constraints hold simultaneously.

    Args:
        rng: numpy Generator
        n_elements: Universe size (>= 1)
        n_sets: Number of sets (>= 1)
        n_constraints: Number of constraints to draw

    Returns:
        SCPInstance with elements e0.. and sets S0..
    """
    if n_elements < 1 or n_sets < 1:
        raise ValueError("random_instance needs at least one element and one set")

    universe = _names('e', n_elements)
    sets = _names('S', n_sets)
    truth = rng.integers(0, 2, size=(n_elements, n_sets)).astype(bool)

    constraints = []
    for _ in range(n_constraints):
        i = int(rng.integers(n_elements))
        kind = int(rng.integers(3))
        members = np.flatnonzero(truth[i])
        non_members = np.flatnonzero(~truth[i])

        if kind == 2 and len(members) and len(non_members):
            p = int(rng.choice(members))
            q = int(rng.choice(non_members))
            constraints.append(Difference(universe[i], sets[p], sets[q]))
            continue

        j = int(rng.integers(n_sets))
        if truth[i, j]:
            constraints.append(Inclusion(universe[i], sets[j]))
        else:
            constraints.append(Exclusion(universe[i], sets[j]))

    return SCPInstance(tuple(universe), tuple(sets), tuple(constraints))


def instance_with_uncertainty(u: int) -> SCPInstance:
    """
    Instance whose matrix has exactly u uncertain cells.

    One set S over elements x0..x_u; x0 is pinned in S, the other u
    elements stay unresolved.
    """
    if u < 0:
        raise ValueError("u must be non-negative")
    universe = _names('x', u + 1)
    return SCPInstance(tuple(universe), ('S',), (Inclusion(universe[0], 'S'),))


def all_uncertain_instance(n_elements: int, n_sets: int) -> SCPInstance:
    """Instance with no constraints: every cell is uncertain."""
    return SCPInstance(tuple(_names('e', n_elements)), tuple(_names('S', n_sets)), ())
