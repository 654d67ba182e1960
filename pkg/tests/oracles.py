"""Independent oracles shared by the test modules."""
import itertools

from qschur_hh.linalg import QQ, EchelonBasis


def graded_dims_by_relations(e):
    """Oracle: dim (kQ/I)_n = #paths of length n - dim span{u r v} with the relations read off the quiver."""
    arrows = {f"a{i}": (i, i + 1) for i in range(1, e)}
    arrows.update({f"b{i}": (i + 1, i) for i in range(1, e)})

    def composable(word):
        # written order, the last arrow is traversed first
        return all(arrows[word[k]][0] == arrows[word[k + 1]][1] for k in range(len(word) - 1))

    def paths(n):
        return [w for w in itertools.product(sorted(arrows), repeat=n) if composable(w)]

    rels = []
    for i in range(2, e):
        rels.append({(f"a{i}", f"a{i-1}"): 1})
        rels.append({(f"b{i-1}", f"b{i}"): 1})
        rels.append({(f"a{i-1}", f"b{i-1}"): 1, (f"b{i}", f"a{i}"): -1})
    rels.append({(f"a{e-1}", f"b{e-1}"): 1})
    dims = [e]
    for n in range(1, 5):
        ps = paths(n)
        idx = {p: k for k, p in enumerate(ps)}
        ech = EchelonBasis(QQ)
        for a in range(n - 1):
            for u in paths(a) if a else [()]:
                for v in paths(n - 2 - a) if n - 2 - a else [()]:
                    for r in rels:
                        vec = {}
                        for word, c in r.items():
                            full = u + word + v
                            if full in idx:
                                vec[idx[full]] = vec.get(idx[full], 0) + c
                        vec = {k: x for k, x in vec.items() if x}
                        if vec:
                            ech.add(vec)
        dims.append(len(ps) - ech.rank)
    return dims
