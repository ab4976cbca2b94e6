#!/usr/bin/env python3
# Copyright 2026 The steenrod Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the triangulation fixtures in fixtures/.

Every fixture is produced deterministically:

  * spheres are boundaries of simplices;
  * rp2 is the 6-vertex hemi-icosahedron;
  * cp2 is the 9-vertex complex found as a union of four orbits of 5-subsets
    of the affine plane AG(2,3) under its translation group (this recovers the
    unique 9-vertex triangulated complex projective plane);
  * rp3, lens_3_1 and lens_4_1 start from the free quotient of the barycentric
    subdivision of the join C_2p * C_2p and are shrunk with seeded bistellar
    moves;
  * dold_p12 is the mapping torus of the orientation preserving involution
    of cp2 with Lefschetz number 1 (complex conjugation), i.e. the Dold
    manifold P(1,2).

Run from the repository root: python3 tools/fixtures/generate_fixtures.py
"""

import itertools
import os
import random
import sys
from collections import defaultdict

OUT = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")


LICENSE = (
    "# Copyright 2026 The steenrod Authors.\n"
    "#\n"
    "# Licensed under the Apache License, Version 2.0 (the \"License\");\n"
    "# you may not use this file except in compliance with the License.\n"
    "# You may obtain a copy of the License at\n"
    "#\n"
    "#      http://www.apache.org/licenses/LICENSE-2.0\n"
    "#\n"
    "# Unless required by applicable law or agreed to in writing, software\n"
    "# distributed under the License is distributed on an \"AS IS\" BASIS,\n"
    "# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
    "# See the License for the specific language governing permissions and\n"
    "# limitations under the License.\n"
    "\n")


def write(name, facets, comment):
    facets = sorted(tuple(sorted(f)) for f in facets)
    with open(os.path.join(OUT, name + ".txt"), "w") as fh:
        fh.write(LICENSE)
        for line in comment:
            fh.write("# " + line + "\n")
        fh.write("name: " + name + "\n")
        for f in facets:
            fh.write(" ".join(map(str, f)) + "\n")


def sphere(d):
    return list(itertools.combinations(range(d + 2), d + 1))


RP2 = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
       (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]


def pseudomanifold(facets):
    count = defaultdict(int)
    for f in facets:
        for j in range(len(f)):
            count[f[:j] + f[j + 1:]] += 1
    return all(v == 2 for v in count.values())


def cp2():
    pts = [(a, b) for a in range(3) for b in range(3)]
    ix = {p: i for i, p in enumerate(pts)}
    orbits, seen = [], set()
    for c in itertools.combinations(range(9), 5):
        if c in seen:
            continue
        orb = set()
        for t in pts:
            orb.add(tuple(sorted(ix[((pts[v][0] + t[0]) % 3, (pts[v][1] + t[1]) % 3)] for v in c)))
        seen |= orb
        orbits.append(sorted(orb))
    for comb in itertools.combinations(range(len(orbits)), 4):
        facets = sorted(f for k in comb for f in orbits[k])
        if not pseudomanifold(facets):
            continue
        edges = {e for f in facets for e in itertools.combinations(f, 2)}
        tets = {t for f in facets for t in itertools.combinations(f, 4)}
        # f-vector (9, 36, 84, 90, 36) singles out CP^2 among the candidates
        if len(edges) == 36 and len(tets) == 90:
            return facets
    raise RuntimeError("no 9-vertex CP2 found")


def automorphisms(facets, n):
    fs = set(facets)
    for p in itertools.permutations(range(n)):
        if all(tuple(sorted(p[v] for v in f)) in fs for f in facets):
            yield p


def perm_sign(p):
    p, s = list(p), 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def induced_sign(p, f):
    img = [p[v] for v in f]
    srt = sorted(img)
    return perm_sign([srt.index(x) for x in img])


def lefschetz(p, facets):
    faces = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, k))
    total = 0
    for s in faces:
        if tuple(sorted(p[v] for v in s)) == s:
            total += (-1) ** (len(s) - 1) * induced_sign(p, s)
    return total


def conjugation(facets):
    for p in automorphisms(facets, 9):
        if p != tuple(range(9)) and all(p[p[v]] == v for v in range(9)) and lefschetz(p, facets) == 1:
            return p
    raise RuntimeError("no conjugation found")


def mapping_torus(facets, c, n, layers=3):
    def vid(v, t):
        if t == layers:
            v, t = c[v], 0
        return t * n + v
    out = set()
    for t in range(layers):
        for f in facets:
            for j in range(len(f)):
                s = [vid(f[i], t) for i in range(j + 1)] + [vid(f[i], t + 1) for i in range(j, len(f))]
                out.add(tuple(sorted(s)))
    return sorted(out)


def lens(p, q):
    n = m = 2 * p
    tets = [frozenset([("a", i), ("a", (i + 1) % n), ("b", j), ("b", (j + 1) % m)])
            for i in range(n) for j in range(m)]

    def act(s, g):
        return frozenset(("a", (x + g * (n // p)) % n) if t == "a" else ("b", (x + g * q * (m // p)) % m)
                         for t, x in s)

    def canon(s):
        return min(tuple(sorted(act(s, g))) for g in range(p))

    facets = set()
    for tet in tets:
        for perm in itertools.permutations(sorted(tet)):
            facets.add(tuple(sorted(canon(frozenset(perm[:r])) for r in range(1, 5))))
    verts = sorted({v for f in facets for v in f})
    ix = {v: i for i, v in enumerate(verts)}
    return sorted(tuple(sorted(ix[v] for v in f)) for f in facets)


def bistellar_reduce(facets, target, seed, iters=20000):
    rnd = random.Random(seed)
    T = set(frozenset(f) for f in facets)
    best = None
    for _ in range(iters):
        vt, et, tt = defaultdict(set), defaultdict(set), defaultdict(set)
        for t in T:
            for v in t:
                vt[v].add(t)
            for e in itertools.combinations(sorted(t), 2):
                et[frozenset(e)].add(t)
            for tr in itertools.combinations(sorted(t), 3):
                tt[frozenset(tr)].add(t)
        if best is None or len(vt) < best[0]:
            best = (len(vt), set(T))
        if len(vt) <= target:
            break
        done = False
        for v, ts in sorted(vt.items(), key=lambda kv: (rnd.random(), kv[0])):
            if len(ts) == 4:
                link = frozenset().union(*ts) - {v}
                if len(link) == 4 and link not in T:
                    T -= ts
                    T.add(link)
                    done = True
                    break
        if done:
            continue
        cands = sorted((e for e, ts in et.items() if len(ts) == 3), key=sorted)
        rnd.shuffle(cands)
        for e in cands:
            ts = et[e]
            tri = frozenset().union(*ts) - e
            if len(tri) == 3 and tri not in tt:
                x, y = sorted(e)
                T -= ts
                T.add(tri | {x})
                T.add(tri | {y})
                done = True
                break
        if done:
            continue
        tris = sorted(tt.items(), key=lambda kv: sorted(kv[0]))
        rnd.shuffle(tris)
        for tr, ts in tris:
            if len(ts) != 2:
                continue
            a, b = sorted(ts, key=sorted)
            x, y = next(iter(a - tr)), next(iter(b - tr))
            if frozenset((x, y)) in et:
                continue
            T -= {a, b}
            for e in itertools.combinations(sorted(tr), 2):
                T.add(frozenset(e) | {x, y})
            break
    verts = sorted({v for t in best[1] for v in t})
    ix = {v: i for i, v in enumerate(verts)}
    return sorted(tuple(sorted(ix[v] for v in t)) for t in best[1])


def main():
    os.makedirs(OUT, exist_ok=True)
    write("s1", [(0, 1), (1, 2), (0, 2)], ["triangle boundary circle"])
    write("s2", sphere(2), ["boundary of the 3-simplex"])
    write("s3", sphere(3), ["boundary of the 4-simplex"])
    write("s5", sphere(5), ["boundary of the 6-simplex"])
    write("rp2", RP2, ["6-vertex real projective plane (hemi-icosahedron)"])
    cp = cp2()
    write("cp2", cp, ["9-vertex complex projective plane, f-vector (9, 36, 84, 90, 36)"])
    conj = conjugation(cp)
    write("dold_p12", mapping_torus(cp, conj, 9),
          ["Dold manifold P(1,2): mapping torus of complex conjugation on cp2",
           "conjugation vertex map: " + " ".join(map(str, conj))])
    for (p, q, target, seed, name) in [(2, 1, 11, 0, "rp3"), (3, 1, 12, 0, "lens_3_1"), (4, 1, 14, 0, "lens_4_1")]:
        red = None
        for s in range(seed, seed + 20):
            red = bistellar_reduce(lens(p, q), target, s)
            if len({v for f in red for v in f}) <= target:
                break
        write(name, red, ["lens space L(%d,%d) via bistellar reduction of the join-quotient construction" % (p, q)])
        print(name, len({v for f in red for v in f}), "vertices", len(red), "facets", file=sys.stderr)


if __name__ == "__main__":
    main()
