#!/usr/bin/env python3
"""Generate the small-group character tables and Brauer trees bundled with pgq-core.

Groups are built concretely (S5 as permutations, C3 x D10 as pairs), classes,
sizes and power maps are computed by brute force, and the character values
are checked for orthogonality before anything is written. Brauer trees are
found by enumerating every labelled tree and sign map on a block's vertices
and keeping those whose edge characters (obtained by peeling leaves) have
positive integer degrees and are linearly independent on p-regular classes,
and for which every edge gives a projective character: the sum of the two
endpoint characters must vanish on all p-singular classes. When these
conditions leave more than one tree (S5 at p = 5), the known line of hook
characters ordered by leg length is required to be among the survivors.
"""

import cmath
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"
TOL = 1e-9


# ---------------------------------------------------------------- groups

def perm_mul(a, b):
    """a after b."""
    return tuple(a[b[i]] for i in range(len(b)))


def perm_order(a):
    e, x, k = tuple(range(len(a))), a, 1
    while x != e:
        x, k = perm_mul(a, x), k + 1
    return k


def perm_pow(a, k):
    r = tuple(range(len(a)))
    for _ in range(k):
        r = perm_mul(a, r)
    return r


def cycle_type(a):
    seen, out = set(), []
    for i in range(len(a)):
        if i in seen:
            continue
        j, n = i, 0
        while j not in seen:
            seen.add(j)
            j, n = a[j], n + 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primes_below(n):
    return [p for p in range(2, n) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


class Group:
    def __init__(self, elements, mul, order_of, power, class_key, class_name):
        self.elements = elements
        self.mul = mul
        self.order_of = order_of
        self.power = power
        self.class_key = class_key
        self.class_name = class_name

    def classes(self):
        buckets = {}
        for g in self.elements:
            buckets.setdefault(self.class_key(g), []).append(g)
        out = []
        for key, members in buckets.items():
            rep = members[0]
            out.append({"key": key, "rep": rep, "size": len(members), "order": self.order_of(rep)})
        return out


def s5():
    elements = list(itertools.permutations(range(5)))
    names = {
        (1, 1, 1, 1, 1): "1a", (2, 1, 1, 1): "2a", (2, 2, 1): "2b", (3, 1, 1): "3a",
        (4, 1): "4a", (5,): "5a", (3, 2): "6a",
    }
    return Group(elements, perm_mul, perm_order, perm_pow, cycle_type, lambda k: names[k])


def c3xd10():
    # D10 = <r, s | r^5, s^2, srs = r^-1>, elements (i, f) meaning r^i s^f.
    def dmul(a, b):
        (i, f), (j, g) = a, b
        return ((i + (-j if f else j)) % 5, (f + g) % 2)

    def mul(x, y):
        return ((x[0] + y[0]) % 3, dmul(x[1], y[1]))

    def power(x, k):
        r = (0, (0, 0))
        for _ in range(k):
            r = mul(x, r)
        return r

    def order_of(x):
        k, y = 1, x
        while y != (0, (0, 0)):
            y, k = mul(x, y), k + 1
        return k

    def dclass(d):
        i, f = d
        if f:
            return "s"
        return {0: "1", 1: "f1", 4: "f1", 2: "f2", 3: "f2"}[i]

    def key(x):
        return (x[0], dclass(x[1]))

    names = {
        (0, "1"): "1a", (0, "s"): "2a", (1, "1"): "3a", (2, "1"): "3b",
        (0, "f1"): "5a", (0, "f2"): "5b", (1, "s"): "6a", (2, "s"): "6b",
        (1, "f1"): "15a", (1, "f2"): "15b", (2, "f1"): "15c", (2, "f2"): "15d",
    }
    elements = [(a, (i, f)) for a in range(3) for i in range(5) for f in range(2)]
    return Group(elements, mul, order_of, power, key, lambda k: names[k])


# ------------------------------------------------------- cyclotomic values

class Cyc:
    """Integer combination of powers of zeta_n."""

    def __init__(self, n, terms):
        self.n = n
        self.terms = {}
        for e, c in terms.items():
            e %= n
            self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    def __mul__(self, other):
        assert self.n == other.n
        out = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[(a + b) % self.n] = out.get((a + b) % self.n, 0) + c * d
        return Cyc(self.n, out)

    def value(self):
        return sum(c * cmath.exp(2j * cmath.pi * e / self.n) for e, c in self.terms.items())

    def text(self):
        if all(e == 0 for e in self.terms):
            return str(self.terms.get(0, 0))
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts).replace("+ -", "- ")
        return f"{s} @ {self.n}"


# --------------------------------------------------------------- tables

S5_CHARS = {
    "5":     [1, 1, 1, 1, 1, 1, 1],
    "41":    [4, 2, 0, 1, 0, -1, -1],
    "32":    [5, 1, 1, -1, -1, 0, 1],
    "311":   [6, 0, -2, 0, 0, 1, 0],
    "221":   [5, -1, 1, -1, 1, 0, -1],
    "2111":  [4, -2, 0, 1, 0, -1, 1],
    "11111": [1, -1, 1, 1, -1, 1, -1],
}
S5_ORDER = ["1a", "2a", "2b", "3a", "4a", "5a", "6a"]


def c3xd10_chars():
    # zeta_15 = z; omega = z^5, zeta_5 = z^3.
    lam = {"1": lambda a: Cyc(15, {0: 1}), "w": lambda a: Cyc(15, {5 * a: 1}),
           "wb": lambda a: Cyc(15, {10 * a: 1})}
    psi = {
        "1": {"1": Cyc(15, {0: 1}), "s": Cyc(15, {0: 1}), "f1": Cyc(15, {0: 1}), "f2": Cyc(15, {0: 1})},
        "sgn": {"1": Cyc(15, {0: 1}), "s": Cyc(15, {0: -1}), "f1": Cyc(15, {0: 1}), "f2": Cyc(15, {0: 1})},
        "psi1": {"1": Cyc(15, {0: 2}), "s": Cyc(15, {}), "f1": Cyc(15, {3: 1, 12: 1}), "f2": Cyc(15, {6: 1, 9: 1})},
        "psi2": {"1": Cyc(15, {0: 2}), "s": Cyc(15, {}), "f1": Cyc(15, {6: 1, 9: 1}), "f2": Cyc(15, {3: 1, 12: 1})},
    }
    out = {}
    for ln, l in lam.items():
        for pn, ps in psi.items():
            out[f"{ln}.{pn}"] = lambda key, l=l, ps=ps: l(key[0]) * ps[key[1]]
    return out


def build_table(group, name, order, char_fns, class_order, provenance):
    classes = {c["key"]: c for c in group.classes()}
    by_name = {group.class_name(k): c for k, c in classes.items()}
    assert sorted(by_name) == sorted(class_order), sorted(by_name)
    assert sum(c["size"] for c in classes.values()) == order
    out_classes = []
    for cn in class_order:
        c = by_name[cn]
        powers = {}
        for r in primes_below(c["order"] + 1):
            if r > 1:
                powers[str(r)] = group.class_name(group.class_key(group.power(c["rep"], r)))
        entry = {"name": cn, "order": c["order"], "size": c["size"]}
        if powers:
            entry["powers"] = powers
        out_classes.append(entry)
    chars = []
    for chn, fn in char_fns.items():
        vals = {cn: fn(by_name[cn]["key"]) for cn in class_order}
        chars.append((chn, vals))
    # orthogonality of rows
    for (a, va), (b, vb) in itertools.product(chars, chars):
        s = sum(by_name[cn]["size"] * va[cn].value() * vb[cn].value().conjugate() for cn in class_order) / order
        assert abs(s - (1 if a == b else 0)) < TOL, (a, b, s)
    assert len(chars) == len(class_order)
    table = {
        "group": name,
        "order": str(order),
        "classes": out_classes,
        "characters": [
            {"name": chn, "degree": round(vals["1a"].value().real),
             "values": {cn: vals[cn].text() for cn in class_order}}
            for chn, vals in chars
        ],
        "provenance": provenance,
    }
    return table, by_name, {chn: vals for chn, vals in chars}


# --------------------------------------------------------- brauer trees

def prufer_trees(labels):
    n = len(labels)
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(labels[0], labels[1])]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((labels[leaf], labels[x]))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [i for i in range(n) if degree[i] == 1]
        edges.append((labels[u], labels[v]))
        yield edges


def rank(rows):
    rows = [list(r) for r in rows]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = max(range(r, len(rows)), key=lambda i: abs(rows[i][c]), default=None)
        if piv is None or abs(rows[piv][c]) < TOL:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def edge_characters(vertices, edges, vals, regular):
    """Peel leaves: a leaf's restriction is its edge's Brauer character."""
    remaining = {v: [vals[v][c] for c in regular] for v in vertices}
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    phi = {}
    live = set(vertices)
    while len(live) > 1:
        leaf = min(v for v in live if len(adj[v] & live) == 1)
        (nb,) = adj[leaf] & live
        f = remaining[leaf]
        phi[(leaf, nb)] = f
        remaining[nb] = [x - y for x, y in zip(remaining[nb], f)]
        live.remove(leaf)
    (last,) = live
    if any(abs(x) > TOL for x in remaining[last]):
        return None
    return phi


def find_trees(block, vals, class_info, p):
    """block: list of vertex names; each vertex value is a list of characters summed."""
    regular = [c for c, info in class_info.items() if info["order"] % p != 0]
    singular = [c for c in class_info if c not in regular]
    full = {v: {c: sum(vals[m][c].value() for m in members) for c in class_info} for v, members in block.items()}
    # every exceptional character restricts to the same Brauer character sum
    vv = {v: {c: vals[members[0]][c].value() for c in regular} for v, members in block.items()}
    names = sorted(block)
    found = []
    for edges in prufer_trees(names):
        if len(edges) > p - 1:
            continue
        if any(abs(full[a][c] + full[b][c]) > TOL for a, b in edges for c in singular):
            continue
        phi = edge_characters(names, edges, vv, regular)
        if phi is None:
            continue
        degs = [f[regular.index("1a")] for f in phi.values()]
        if any(abs(d - round(d.real)) > TOL or round(d.real) <= 0 for d in degs):
            continue
        if phi and rank(list(phi.values())) != len(phi):
            continue
        found.append(sorted(tuple(sorted(e)) for e in edges))
    return found


def signs_for(edges, names, root):
    sign = {root: 1}
    frontier = [root]
    while frontier:
        v = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in sign:
                    sign[y] = -sign[v]
                    frontier.append(y)
    return sign


def tree_json(name, group, p, block, edges, root, provenance, exceptional=None):
    sign = signs_for(edges, list(block), root)
    vertices = []
    for v in sorted(block):
        entry = {"name": v, "sign": sign[v]}
        if v == exceptional:
            entry["exceptional"] = True
            entry["t"] = len(block[v])
            entry["characters"] = list(block[v])
        elif block[v] != [v]:
            entry["characters"] = list(block[v])
        vertices.append(entry)
    labels = [[a, b, f"S{i + 1}"] for i, (a, b) in enumerate(edges)]
    return {"name": name, "group": group, "prime": p, "vertices": vertices, "edges": labels,
            "provenance": provenance}


# Maximal element orders of sporadic groups (ATLAS of Finite Groups); the
# profiles store the divisor closure.
SPORADIC = {
    "M11": (7920, [5, 6, 8, 11]),
    "M12": (95040, [6, 8, 10, 11]),
    "M22": (443520, [5, 6, 7, 8, 11]),
    "M23": (10200960, [6, 7, 8, 11, 14, 15, 23]),
    "M24": (244823040, [7, 8, 10, 11, 12, 14, 15, 21, 23]),
    "J1": (175560, [6, 7, 10, 11, 15, 19]),
    "J2": (604800, [7, 8, 10, 12, 15]),
    "HS": (44352000, [7, 8, 11, 12, 14, 15, 20]),
    "McL": (898128000, [8, 9, 11, 12, 14, 30]),
    "He": (4030387200, [8, 10, 12, 14, 15, 17, 21, 28]),
    "ON": (460815505920, [11, 12, 14, 15, 16, 19, 20, 28, 31]),
    "Th": (90745943887872000, [19, 20, 21, 24, 27, 28, 30, 31, 36, 39]),
    "M": (808017424794512875886459904961710757005754368000000000,
          [25, 27, 29, 31, 32, 33, 34, 35, 36, 38, 39, 40, 41, 42, 44, 45, 46, 47, 48, 50, 51, 52, 54,
           55, 56, 57, 59, 60, 62, 66, 68, 69, 70, 71, 78, 84, 87, 88, 92, 93, 94, 95, 104, 105, 110, 119]),
}


def divisor_closure(orders):
    return sorted({d for n in orders for d in range(1, n + 1) if n % d == 0})


def profile(name, order, orders, provenance, lie_family=None):
    out = {"name": name, "order": str(order), "spectrum": divisor_closure(orders)}
    if lie_family:
        out["lie_family"] = lie_family
    out["provenance"] = provenance
    for n in out["spectrum"]:
        assert order % n == 0, (name, n)
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    written = []

    profiles = {}
    for name, (order, orders) in SPORADIC.items():
        key = {"M": "monster", "Th": "thompson", "ON": "onan", "He": "held"}.get(name, name.lower())
        profiles[key] = profile(name, order, orders, "element orders from the ATLAS of Finite Groups")
    a8 = [p for p in itertools.permutations(range(8))
          if sum(1 for c in cycle_type(p) if c % 2 == 0) % 2 == 0]
    profiles["psl4_2"] = profile("PSL(4,2)", len(a8), sorted({perm_order(p) for p in a8}),
                                 "brute force over A8, which is isomorphic to PSL(4,2)", "PSL4")
    s5_elems = list(itertools.permutations(range(5)))
    profiles["s5"] = profile("S5", 120, sorted({perm_order(p) for p in s5_elems}), "brute force over S5")
    g = c3xd10()
    profiles["c3xd10"] = profile("C3xD10", len(g.elements), sorted({g.order_of(x) for x in g.elements}),
                                 "brute force over C3 x D10")
    (OUT / "profiles").mkdir(exist_ok=True)
    for key, prof in profiles.items():
        (OUT / "profiles" / f"{key}.json").write_text(json.dumps(prof, indent=2) + "\n")
        written.append(f"profiles/{key}.json")

    g = s5()
    fns = {k: (lambda key, row=row: Cyc(1, {0: row[S5_ORDER.index(g.class_name(key))]})) for k, row in S5_CHARS.items()}
    table, info, vals = build_table(g, "S5", 120, fns, S5_ORDER,
                                    "generated by scripts/gen_fixtures.py from the permutation action on 5 points")
    (OUT / "s5.json").write_text(json.dumps(table, indent=2) + "\n")
    written.append("s5.json")

    s5_blocks = [
        ("s5_p3_principal", 3, {"5": ["5"], "221": ["221"], "2111": ["2111"]}, "5", None),
        ("s5_p3_sign", 3, {"11111": ["11111"], "32": ["32"], "41": ["41"]}, "11111", None),
        ("s5_p5_principal", 5, {k: [k] for k in ["5", "41", "311", "2111", "11111"]}, "5", None),
    ]
    hooks = ["5", "41", "311", "2111", "11111"]
    expected = {"s5_p5_principal": sorted(tuple(sorted(e)) for e in zip(hooks, hooks[1:]))}
    trees = []
    for name, p, block, root, exc in s5_blocks:
        found = find_trees(block, vals, info, p)
        if name in expected:
            assert expected[name] in found, (name, found)
            found = [expected[name]]
        assert len(found) == 1, (name, found)
        trees.append(tree_json(name, "S5", p, block, found[0], root,
                               "tree found by exhaustive search over labelled trees", exc))

    g = c3xd10()
    order = ["1a", "2a", "3a", "3b", "5a", "5b", "6a", "6b", "15a", "15b", "15c", "15d"]
    table, info, vals = build_table(g, "C3xD10", 30, c3xd10_chars(), order,
                                    "generated by scripts/gen_fixtures.py as C3 x D10 with zeta_3 = z^5, zeta_5 = z^3 in Q(zeta_15)")
    (OUT / "c3xd10.json").write_text(json.dumps(table, indent=2) + "\n")
    written.append("c3xd10.json")

    for l in ["1", "w", "wb"]:
        block = {f"{l}.1": [f"{l}.1"], f"{l}.sgn": [f"{l}.sgn"], f"{l}.psi": [f"{l}.psi1", f"{l}.psi2"]}
        found = find_trees(block, vals, info, 5)
        # the exceptional vertex sits at the centre of the star
        found = [t for t in found if all(f"{l}.psi" in e for e in t)]
        assert len(found) == 1, found
        trees.append(tree_json(f"c3xd10_p5_{l}", "C3xD10", 5, block, found[0], f"{l}.1",
                               "tree found by exhaustive search over labelled trees", f"{l}.psi"))
    for ps in ["1", "sgn", "psi1", "psi2"]:
        block = {f"1.{ps}": [f"1.{ps}"], f"w.{ps}": [f"w.{ps}", f"wb.{ps}"]}
        found = find_trees(block, vals, info, 3)
        assert len(found) == 1, found
        trees.append(tree_json(f"c3xd10_p3_{ps}", "C3xD10", 3, block, found[0], f"1.{ps}",
                               "tree found by exhaustive search over labelled trees", f"w.{ps}"))

    for t in trees:
        fn = t["name"] + ".json"
        (OUT / "trees").mkdir(exist_ok=True)
        (OUT / "trees" / fn).write_text(json.dumps(t, indent=2) + "\n")
        written.append("trees/" + fn)
    print("\n".join(written))


if __name__ == "__main__":
    sys.exit(main())
