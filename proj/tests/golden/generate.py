#!/usr/bin/env python3
"""Regenerate the pinned witness sets in this directory.

Each golden file lists every (context, outcome) pair whose paradox formula
is unsatisfiable — one per line as "<context-label> <outcome-string>" —
with contexts in enumeration order (party 1 most significant) and outcomes
within a context listed all-plus first (descending outcome mask).

The three models are rebuilt here from scratch: numpy state vectors, the
Born rule via Kronecker products, and an exhaustive search over global
outcome assignments. Nothing from the C++ library is involved, so these
files stay an independent cross-check of what they guard.
"""

import itertools
import math
import pathlib

import numpy as np

SUPPORT_TOL = 1e-9
HERE = pathlib.Path(__file__).resolve().parent


def outcome_str(mask: int, parties: int) -> str:
    return "".join(
        "+" if (mask >> (parties - p)) & 1 else "-" for p in range(1, parties + 1)
    )


def brute_force_witnesses(menus, tables):
    """All support outcomes that extend to no globally consistent assignment.

    menus: per party, the list of observable labels.
    tables: per context (party-major enumeration), probabilities indexed by
    outcome mask (party 1 = most significant bit, 1 = '+').
    Returns (witness lines, strongly_contextual, support sizes).
    """
    parties = len(menus)
    variables = [(p, lab) for p in range(parties) for lab in menus[p]]
    vidx = {v: i for i, v in enumerate(variables)}
    contexts = list(itertools.product(*[range(len(m)) for m in menus]))
    supports = [
        {s for s, prob in enumerate(t) if prob > SUPPORT_TOL} for t in tables
    ]

    def restriction(bits, ctx):
        mask = 0
        for p, choice in enumerate(contexts[ctx]):
            mask = (mask << 1) | bits[vidx[(p, menus[p][choice])]]
        return mask

    extendable = set()
    any_global = False
    for bits in itertools.product((0, 1), repeat=len(variables)):
        restricted = [restriction(bits, c) for c in range(len(contexts))]
        if all(r in supports[c] for c, r in enumerate(restricted)):
            any_global = True
            for c, r in enumerate(restricted):
                extendable.add((c, r))

    lines = []
    for c in range(len(contexts)):
        label = ",".join(menus[p][choice] for p, choice in enumerate(contexts[c]))
        for s in sorted(supports[c], reverse=True):
            if (c, s) not in extendable:
                lines.append(f"{label} {outcome_str(s, parties)}")
    return lines, not any_global, [len(s) for s in supports]


def born_tables(state, menus, observables):
    """Born-rule probability tables; observables[(p, label)] = (plus, minus)."""
    parties = len(menus)
    contexts = list(itertools.product(*[range(len(m)) for m in menus]))
    tables = []
    for ctx in contexts:
        row = []
        for mask in range(1 << parties):
            vec = np.array([1.0 + 0j])
            for p, choice in enumerate(ctx):
                plus, minus = observables[(p, menus[p][choice])]
                bit = (mask >> (parties - 1 - p)) & 1
                vec = np.kron(vec, plus if bit else minus)
            row.append(abs(np.vdot(vec, state)) ** 2)
        assert abs(sum(row) - 1.0) < 1e-9
        tables.append(row)
    return tables


def perp(v):
    return np.array([-np.conj(v[1]), np.conj(v[0])])


def pr_box():
    menus = [["A1", "A2"], ["B1", "B2"]]
    tables = [
        [0.5, 0.0, 0.0, 0.5],  # A1,B1: perfectly correlated
        [0.5, 0.0, 0.0, 0.5],  # A1,B2
        [0.5, 0.0, 0.0, 0.5],  # A2,B1
        [0.0, 0.5, 0.5, 0.0],  # A2,B2: perfectly anticorrelated
    ]
    return menus, tables


def ghz3_xy():
    s = 1 / math.sqrt(2)
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = s
    x_plus = np.array([s, s], dtype=complex)
    y_plus = np.array([s, s * 1j], dtype=complex)
    menus = [["X", "Y"]] * 3
    obs = {}
    for p in range(3):
        obs[(p, "X")] = (x_plus, perp(x_plus) * -1)  # (s, -s): phase-free minus
        obs[(p, "Y")] = (y_plus, np.array([s, -s * 1j]))
    return menus, born_tables(ghz, menus, obs)


def ghz3_hardy():
    """The witness model the classifier builds for GHZ3, re-derived.

    Splitting off qubit 3 leaves two product branches, so the construction
    blends them: tau(a) = a|00> + sqrt(1-a^2)|11> at the first sweep value
    a = 1/20 is entangled but not maximally, qubits 1 and 2 get the
    two-observable paradox pair built from tau's Schmidt coefficients, and
    qubit 3 gets the single direction whose '+' outcome projects the GHZ
    state back onto tau(a).
    """
    a = 1 / 20
    big, small = math.sqrt(1 - a * a), a  # tau's Schmidt coefficients

    # Schmidt bases with the sign convention tau = big|e+ f+> - small|e- f->:
    # e+ = f+ = |1>, e- = |0>, f- = -|0>.
    e_plus = np.array([0, 1], dtype=complex)
    e_minus = np.array([1, 0], dtype=complex)
    f_plus = np.array([0, 1], dtype=complex)
    f_minus = np.array([-1, 0], dtype=complex)

    # Measurement directions from the coefficients.
    u = np.array([math.sqrt(small), math.sqrt(big)]) / math.sqrt(big + small)
    d = np.array([small ** 1.5, -(big ** 1.5)]) / math.sqrt(big ** 3 + small ** 3)

    def direction(coeffs, bp, bm):
        v = coeffs[0] * bp + coeffs[1] * bm
        return v / np.linalg.norm(v)

    obs = {}
    for p, (bp, bm) in enumerate([(e_plus, e_minus), (f_plus, f_minus)]):
        up = direction(u, bp, bm)
        dp = direction(d, bp, bm)
        obs[(p, "U")] = (up, perp(up))
        obs[(p, "D")] = (dp, perp(dp))

    # Party 3: '+' outcome proportional to y on the |0> branch, x on |1>.
    x = (1 / math.sqrt(2)) / a
    y = (1 / math.sqrt(2)) / math.sqrt(1 - a * a)
    b_plus = np.array([np.conj(y), np.conj(x)])
    b_plus /= np.linalg.norm(b_plus)
    b_minus = np.array([x, -y], dtype=complex)
    b_minus /= np.linalg.norm(b_minus)
    obs[(2, "B")] = (b_plus, b_minus)

    s = 1 / math.sqrt(2)
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = s
    menus = [["U", "D"], ["U", "D"], ["B"]]
    return menus, born_tables(ghz, menus, obs)


def main():
    jobs = [
        ("pr_box.witnesses", pr_box, dict(strong=True, count=8)),
        ("ghz3_xy.witnesses", ghz3_xy, dict(strong=True, count=48)),
        ("ghz3_hardy.witnesses", ghz3_hardy, dict(strong=False, count=1)),
    ]
    for name, build, expect in jobs:
        menus, tables = build()
        lines, strong, sizes = brute_force_witnesses(menus, tables)
        assert strong == expect["strong"], (name, strong)
        assert len(lines) == expect["count"], (name, len(lines), lines)
        path = HERE / name
        path.write_text("".join(line + "\n" for line in lines))
        print(f"{name}: {len(lines)} witnesses, strong={strong}, supports={sizes}")


if __name__ == "__main__":
    main()
