"""Pure-Python boolean relation kernels.

A relation on ``n`` states is a tuple of ``n`` ints; bit ``j`` of ``rows[i]``
is set iff ``i -> j``. A labelled transition system is a tuple of such
relations, one per letter. Python ints have no width limit, so this module
handles any number of states; the compiled kernels defer to it above 64.
"""


def identity(n):
    return tuple(1 << q for q in range(n))


def compose(a, b):
    """Relation ``a`` followed by relation ``b`` (boolean matrix product)."""
    out = []
    for bits in a:
        acc = 0
        while bits:
            low = bits & -bits
            acc |= b[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return tuple(out)


def word_relation(rels, word, n):
    """Relation labelled by ``word`` (a sequence of letter indices)."""
    if not word:
        return identity(n)
    cur = rels[word[0]]
    for a in word[1:]:
        cur = compose(cur, rels[a])
    return cur


def desub_relations(rels, images, n):
    """Per-letter relations of the desubstituted system.

    ``images[a]`` is the image of letter ``a`` as a tuple of letter indices;
    an empty image yields the identity relation.
    """
    return tuple(word_relation(rels, img, n) for img in images)


def live_mask(rels, n):
    """Bitmask of the states from which an infinite walk exists.

    Greatest fixpoint of ``S -> {q in S : q has a successor in S}``.
    """
    succ = [0] * n
    for rows in rels:
        for q in range(n):
            succ[q] |= rows[q]
    live = (1 << n) - 1
    while True:
        nxt = 0
        for q in range(n):
            if (live >> q) & 1 and succ[q] & live:
                nxt |= 1 << q
        if nxt == live:
            return live
        live = nxt


def image_mask(rels, letter, mask):
    """Set of states reachable from ``mask`` by one ``letter`` step."""
    rows = rels[letter]
    acc = 0
    while mask:
        low = mask & -mask
        acc |= rows[low.bit_length() - 1]
        mask ^= low
    return acc


def powerset_universal(rels, start):
    """True iff the empty set is unreachable from ``start`` in the subset graph.

    ``rels`` must already be restricted to the states of interest. An empty
    ``start`` is reported as not universal.
    """
    if not start:
        return False
    seen = {start}
    stack = [start]
    k = len(rels)
    while stack:
        cur = stack.pop()
        for a in range(k):
            nxt = image_mask(rels, a, cur)
            if not nxt:
                return False
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return True


def meta_closure(rels0, codes_list, n, budget):
    """Breadth-first closure of ``rels0`` under each desubstitution in ``codes_list``.

    Returns ``(vertices, edges, live)``: the distinct transition systems in
    discovery order, ``edges[v][i]`` the index reached from ``v`` by the
    ``i``-th morphism, and each vertex's live-state mask. Returns None when
    more than ``budget`` vertices would be needed.
    """
    index = {rels0: 0}
    verts = [rels0]
    edges = []
    v = 0
    while v < len(verts):
        row = []
        for codes in codes_list:
            target = desub_relations(verts[v], codes, n)
            w = index.get(target)
            if w is None:
                if len(verts) >= budget:
                    return None
                w = index[target] = len(verts)
                verts.append(target)
            row.append(w)
        edges.append(tuple(row))
        v += 1
    return verts, edges, [live_mask(r, n) for r in verts]
