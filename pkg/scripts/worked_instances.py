"""Print elementary vectors and decompositions for the worked two- and four-dimensional instances."""
from fractions import Fraction

from elemvec import flux, oracle
from elemvec.cone import conformal_decompose_cone, enumerate_evs_cone, make_cone
from elemvec.instance import format_vector
from elemvec.polyhedron import conformal_decompose_polyhedron, enumerate_evs_polyhedron, make_polyhedron
from elemvec.scone import conformal_decompose, enumerate_evs, make_scone


def show(title, vectors):
    print(f"{title}:")
    for v in vectors:
        print("   ", " ".join(f"{s:>4}" for s in format_vector(v)))


def main():
    net = flux.make_network([[1, -1, 0, -1], [0, 1, -1, 0]], irreversible=[0, 1, 2])
    K = flux.flux_cone(net)
    show("flux cone EMs", enumerate_evs(K))
    show("f = (2,1,1,1) as a conformal sum", conformal_decompose(K, (2, 1, 1, 1)).terms)

    P = flux.flux_polyhedron(net, flux.ReactionBounds({0: (None, Fraction(2))}))
    evs = enumerate_evs_polyhedron(P)
    show("flux polyhedron (f1 <= 2) rays", evs.conic)
    show("flux polyhedron points", evs.points)
    dec = conformal_decompose_polyhedron(P, (2, 1, 1, 1))
    print("f in the polyhedron:", [(str(w), format_vector(p)) for w, p in dec.convex_terms])
    show("after knocking out reaction 4", flux.knockout_evs(evs, [3]).points)

    S = make_scone([[1, -1, -1, 1]], range(4))
    show("nonnegative EVs of ker(1,-1,-1,1)", enumerate_evs(S))
    x = (1, 2, 3, 4)
    print("fewest EVs in a conformal sum of (1,2,3,4):", oracle.min_conformal_size(S, x))
    show("greedy decomposition", conformal_decompose(S, x).terms)

    C = make_cone([[3, 1], [-1, 1]])
    show("cone {3x1+x2 >= 0, -x1+x2 >= 0} EVs", enumerate_evs_cone(C))
    show("(1,3) in that cone", conformal_decompose_cone(C, (1, 3)).terms)

    Q = make_polyhedron([[3, 1], [-3, 3], [0, 2]], [1, -1, 1])
    evs = enumerate_evs_polyhedron(Q)
    show("polyhedron rays", evs.conic)
    show("polyhedron points", evs.points)


if __name__ == "__main__":
    main()
