"""Independent naive oracles: membership-only, saturation-style, no engine code.

Everything here works on plain table lists and Python sets, recomputing each
ingredient (homogeneous sets, colon sets, scaled parts) inline.  The coding
style is deliberately different from the engine (full-pass saturation loops
instead of worklists) so the two paths share no logic beyond the definitions.
"""

from __future__ import annotations


def saturate_add(add, seed, zero):
    cur = set(seed)
    cur.add(zero)
    changed = True
    while changed:
        changed = False
        for x in list(cur):
            for y in list(cur):
                s = add[x][y]
                if s not in cur:
                    cur.add(s)
                    changed = True
    return cur


def products_closure(add, table, left, right, zero):
    prods = set()
    for a in left:
        for b in right:
            prods.add(table[a][b])
    return saturate_add(add, prods, zero)


def closure_under(add, table, scalars, seed, zero):
    cur = set(seed)
    cur.add(zero)
    changed = True
    while changed:
        changed = False
        for x in list(cur):
            for y in list(cur):
                if add[x][y] not in cur:
                    cur.add(add[x][y])
                    changed = True
            for s in scalars:
                if table[s][x] not in cur:
                    cur.add(table[s][x])
                    changed = True
    return cur


def hom_of(components):
    out = set()
    for _, elems in components:
        out.update(elems)
    return sorted(out)


def colon_ring(act, ring_size, mod_size, nset):
    out = set()
    for r in range(ring_size):
        if all(act[r][m] in nset for m in range(mod_size)):
            out.add(r)
    return out


def e_scaled(gm_tables, ideal_elems, n_elems):
    """Scaled part: additive closure of (identity-degree ideal part) * n."""
    add, act, zero, e_comp = gm_tables
    e_part = [x for x in ideal_elems if x in e_comp]
    return products_closure(add, act, e_part, n_elems, zero)


class Tables:
    """Raw view of a graded module: lists and sets only."""

    def __init__(self, gm):
        self.radd = gm.ring_graded.ring.add.tolist()
        self.rmul = gm.ring_graded.ring.mul.tolist()
        self.madd = gm.module.add.tolist()
        self.act = gm.module.act.tolist()
        self.rzero = gm.ring_graded.ring.zero
        self.mzero = gm.module.zero
        self.rsize = gm.ring_graded.ring.size
        self.msize = gm.module.size
        self.hom_r = hom_of(gm.ring_graded.grading.components)
        self.hom_m = hom_of(gm.grading.components)
        e = gm.group.identity
        self.re = sorted(gm.ring_graded.grading.component_map[e])
        self.comp_m = {g: sorted(e2) for g, e2 in gm.grading.components}


def prime_family_scan(t: Tables, n_elems, excluded):
    """Shared raw scan; returns (value, witness_pair)."""
    nset = set(n_elems)
    colon = colon_ring(t.act, t.rsize, t.msize, nset)
    for r in t.hom_r:
        if r in colon:
            continue
        for m in t.hom_m:
            p = t.act[r][m]
            if p in nset and p not in excluded and m not in nset:
                return False, (r, m)
    return True, None


def graded_prime(gm, n_elems):
    return prime_family_scan(Tables(gm), n_elems, set())


def graded_weakly_prime(gm, n_elems):
    t = Tables(gm)
    vacuous = set(n_elems) == {t.mzero}
    value, w = prime_family_scan(t, n_elems, {t.mzero})
    return value, w, vacuous


def graded_ie_prime(gm, n_elems, ideal_elems):
    t = Tables(gm)
    scaled = e_scaled((t.madd, t.act, t.mzero, set(t.re)), ideal_elems, n_elems)
    vacuous = set(n_elems) <= scaled
    if vacuous:
        return True, None, True
    value, w = prime_family_scan(t, n_elems, scaled)
    return value, w, False


def component_scan(t: Tables, g, n_elems, excluded):
    mg = t.comp_m[g]
    ng = set(x for x in n_elems if x in set(mg))
    colon = set(r for r in t.re if all(t.act[r][m] in ng for m in mg))
    for r in t.re:
        if r in colon:
            continue
        for m in mg:
            p = t.act[r][m]
            if p in ng and p not in excluded and m not in ng:
                return False, (r, m)
    return True, None


def g_prime(gm, n_elems, g):
    return component_scan(Tables(gm), g, n_elems, set())


def g_ie_prime(gm, n_elems, ideal_elems, g):
    t = Tables(gm)
    mg = set(t.comp_m[g])
    ng = [x for x in n_elems if x in mg]
    e_comp = set(gm.ring_graded.grading.component_map[gm.group.identity])
    scaled = products_closure(t.madd, t.act,
                              [x for x in ideal_elems if x in e_comp], ng, t.mzero)
    vacuous = set(ng) <= scaled
    if vacuous:
        return True, None, True
    value, w = component_scan(t, g, n_elems, scaled)
    return value, w, False


def e_ie_prime_ideal(gm, j_elems, ideal_elems):
    t = Tables(gm)
    re = set(t.re)
    je = set(j_elems) & re
    e_comp = set(gm.ring_graded.grading.component_map[gm.group.identity])
    ie_je = products_closure(t.radd, t.rmul,
                             [x for x in ideal_elems if x in e_comp], sorted(je), t.rzero)
    if je <= ie_je:
        return True, None, True
    for r in t.re:
        if r in je:
            continue
        for s in t.re:
            if s in je:
                continue
            p = t.rmul[r][s]
            if p in je and p not in ie_je:
                return False, (r, s), False
    return True, None, False


def all_submodules(gm, candidates, scalars):
    """Enumerate closed subsets by saturation from growing generator sets."""
    t = Tables(gm)
    base = tuple(sorted(closure_under(t.madd, t.act, scalars, (), t.mzero)))
    found = {base}
    queue = [base]
    while queue:
        cur = queue.pop()
        for c in candidates:
            if c in cur:
                continue
            nxt = tuple(sorted(closure_under(t.madd, t.act, scalars, set(cur) | {c}, t.mzero)))
            if nxt not in found:
                found.add(nxt)
                queue.append(nxt)
    return sorted(found)


def is_multiplication_whole(gm):
    t = Tables(gm)
    for n in all_submodules(gm, t.hom_m, range(t.rsize)):
        nset = set(n)
        colon = colon_ring(t.act, t.rsize, t.msize, nset)
        back = products_closure(t.madd, t.act, sorted(colon), range(t.msize), t.mzero)
        if back != nset:
            return False, n
    return True, None


def is_multiplication_component(gm, g):
    t = Tables(gm)
    mg = t.comp_m[g]
    for k in all_submodules(gm, mg, t.re):
        kset = set(k)
        colon = [r for r in t.re if all(t.act[r][m] in kset for m in mg)]
        back = products_closure(t.madd, t.act, colon, mg, t.mzero)
        if back != kset:
            return False, k
    return True, None


def power_radical(mul, domain, target, ring_size):
    """Exponent search bounded by the carrier size (powers cycle within it)."""
    out = []
    for x in domain:
        p = x
        hit = False
        for _ in range(ring_size):
            if p in target:
                hit = True
                break
            p = mul[p][x]
        if hit:
            out.append(x)
    return out
