#!/usr/bin/env python3
"""Regenerate the graph6 strings stored in src/catalog_data.inc.

Independent of the C++ library: LCF notation through networkx, the
Higman-Sims family through the Steiner system S(3,6,22) derived from the
extended binary Golay code.
"""
import itertools

import networkx as nx
import sympy
from sympy.polys.matrices import DomainMatrix


def g6(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def golay_octads():
    gen = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # x^11+x^10+x^6+x^5+x^4+x^2+1, low first
    rows = []
    for s in range(12):
        w = [0] * 23
        for i, b in enumerate(gen):
            w[i + s] = b
        rows.append(w + [sum(w) % 2])
    octads = []
    for mask in range(1 << 12):
        w = [0] * 24
        for i in range(12):
            if mask >> i & 1:
                w = [a ^ b for a, b in zip(w, rows[i])]
        if sum(w) == 8:
            octads.append(frozenset(i for i in range(24) if w[i]))
    assert len(octads) == 759
    return octads


def steiner_3_6_22():
    octads = golay_octads()
    blocks = sorted(sorted(o - {22, 23}) for o in octads if {22, 23} <= o)
    assert len(blocks) == 77
    return [frozenset(b) for b in blocks]


def m22_graph(blocks):
    g = nx.Graph()
    g.add_nodes_from(range(len(blocks)))
    for i, j in itertools.combinations(range(len(blocks)), 2):
        if not blocks[i] & blocks[j]:
            g.add_edge(i, j)
    return g


def gewirtz(blocks):
    sub = [b for b in blocks if 0 not in b]
    return m22_graph(sub)


def higman_sims(blocks):
    g = nx.Graph()
    g.add_nodes_from(range(100))
    for p in range(22):
        g.add_edge(0, 1 + p)
    for i, b in enumerate(blocks):
        for p in b:
            g.add_edge(1 + p, 23 + i)
        for j in range(i + 1, len(blocks)):
            if not b & blocks[j]:
                g.add_edge(23 + i, 23 + j)
    return g


def poly_string(coeffs):
    # coefficients highest first, formatted like IntPoly::to_string
    out = ""
    deg = len(coeffs) - 1
    for i, c in enumerate(coeffs):
        d = deg - i
        if c == 0:
            continue
        out += "-" if c < 0 else ("+" if out else "")
        if d == 0 or abs(c) != 1:
            out += str(abs(c))
        if d >= 1:
            out += "x"
        if d >= 2:
            out += f"^{d}"
    return out


def factored_charpoly(g):
    nodes = sorted(g)
    a = [[sympy.ZZ(1 if g.has_edge(u, v) else 0) for v in nodes] for u in nodes]
    cp = DomainMatrix(a, (len(nodes), len(nodes)), sympy.ZZ).charpoly()
    x = sympy.symbols("x")
    _, factors = sympy.Poly([int(c) for c in cp], x).factor_list()

    def top(f):
        roots = sympy.Poly(f, x).real_roots()
        return max(float(r) for r in roots) if roots else float("-inf")

    factors.sort(key=lambda fm: -top(fm[0]))
    parts = []
    for f, m in factors:
        parts.append(f"({poly_string([int(c) for c in f.all_coeffs()])})" + (f"^{m}" if m > 1 else ""))
    return "".join(parts)


def main():
    blocks = steiner_3_6_22()
    data = {
        "heawood": nx.LCF_graph(14, [5, -5], 7),
        "pappus": nx.LCF_graph(18, [5, 7, -7, 7, -7, -5], 3),
        "mcgee": nx.LCF_graph(24, [12, 7, -7], 8),
        "tutte_coxeter": nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5),
        "tutte_12cage": nx.LCF_graph(
            126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17], 7),
        "gewirtz": gewirtz(blocks),
        "m22_graph": m22_graph(blocks),
        "higman_sims": higman_sims(blocks),
    }
    for name, g in data.items():
        degs = {d for _, d in g.degree()}
        print(f'// {name}: n={g.number_of_nodes()} degrees={sorted(degs)} girth={nx.girth(g)}')
        print(f'{{"{name}", R"g6({g6(g)})g6", "{factored_charpoly(g)}"}},')


if __name__ == "__main__":
    main()
