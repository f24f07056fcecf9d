# Copyright 2026 The sgq Authors
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

# PSL(2,11) on the projective line with plain tuples, no library code.
# Counts, for every A4 subgroup H and involution z outside H with
# |H cap H^z| = 3, whether z inverts or centralizes the order-3 element and
# the order of <H, z>. The frozen totals are compared with what the sgq
# coset command reports.

import json
import subprocess
import sys
from collections import Counter

P = 11
N = P + 1
E = tuple(range(N))


def mul(a, b):  # a then b
    return tuple(b[a[i]] for i in range(N))


def inverse(a):
    r = [0] * N
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def closure(gens):
    seen, todo = {E}, [E]
    while todo:
        g = todo.pop()
        for s in gens:
            h = mul(g, s)
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return frozenset(seen)


def order(a):
    k, x = 1, a
    while x != E:
        x, k = mul(x, a), k + 1
    return k


def main():
    shift = tuple([(x + 1) % P for x in range(P)] + [P])
    neg = tuple([P if x == 0 else (P - pow(x, P - 2, P)) % P for x in range(P)] + [0])
    G = closure([shift, neg])
    assert len(G) == 660, len(G)

    inv2 = [g for g in G if order(g) == 2]
    thr = [g for g in G if order(g) == 3]
    subs = set()
    for a in inv2:
        for b in thr:
            if order(mul(a, b)) == 3:
                S = closure([a, b])
                if len(S) == 12:
                    subs.add(S)
    assert len(subs) == 55, len(subs)

    tally = Counter()
    for H in subs:
        for z in inv2:
            if z in H:
                continue
            Hz = frozenset(mul(mul(inverse(z), h), z) for h in H)
            Pz = H & Hz
            if len(Pz) != 3:
                continue
            h = next(x for x in Pz if x != E)
            hz = mul(mul(inverse(z), h), z)
            kind = "inverts" if hz == inverse(h) else "centralizes" if hz == h else "other"
            tally[(kind, len(closure(list(H) + [z])))] += 1
    expect = {("inverts", 60): 1320, ("centralizes", 660): 220}
    assert dict(tally) == expect, dict(tally)

    # sgq: every hit inverts, so none generates and the graph splits into
    # 660 / 60 = 11 copies of the A5 coset graph
    out = subprocess.run([sys.argv[1], "coset", "--psl2", "11", "--shape", "A4"],
                         check=True, capture_output=True, text=True).stdout
    r = json.loads(out)
    assert r["group_order"] == 660, r
    assert r["hits"] > 0, r
    assert r["generating_hits"] == 0, r
    g = r["graph"]
    assert g["vertices"] == 55 and g["valency"] == 4, g
    assert g["components"] == 660 // 60, g
    print("psl2(11) oracle agrees:", dict(tally), "hits", r["hits"])


if __name__ == "__main__":
    main()
