"""Randomized search for a unital homomorphism FZ_2 -> End(A), A = M_2,
that the generalized-action solver rejects.  rho(s) = P D P^-1 with D a
random +-1 diagonal, so rho is always a unital homomorphism; most such maps
are not generalized actions.  Prints the first hit as a scenario file."""

import argparse
import random

from pilab.actions import Action, check_generalized_action, check_homomorphism, cyclic_group, group_algebra
from pilab.constructions import matrix_algebra
from pilab.gallery import Scenario
from pilab.linalg import det, identity, inverse, matmul
from pilab.scenario import emit_scenario


def candidate(rng: random.Random, n: int):
    while True:
        p = [[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)]
        if det(p):
            break
    d = [[(rng.choice((1, -1)) if r == c else 0) for c in range(n)] for r in range(n)]
    return matmul(matmul(p, d), inverse(p))


def search(seed: int, tries: int):
    rng = random.Random(seed)
    a = matrix_algebra(2)
    h = group_algebra(cyclic_group(2)).algebra
    for k in range(tries):
        rho = candidate(rng, a.dim)
        ops = tuple(tuple(map(tuple, m)) for m in (identity(a.dim), rho))
        act = Action(h, ops, "generalized")
        assert check_homomorphism(act).passed
        if not check_generalized_action(h, a, act).passed:
            return k, Scenario("rejected generalized action on M2", a, "generalized", act)
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=1000)
    args = ap.parse_args()
    hit = search(args.seed, args.tries)
    if hit is None:
        raise SystemExit("no rejected action found")
    print(emit_scenario(hit[1]), end="")


if __name__ == "__main__":
    main()
