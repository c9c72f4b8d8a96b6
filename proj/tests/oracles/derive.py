"""Independent reference values, computed with sympy from first principles.

Writes `key: value` lines. Values are exact rationals, space separated;
matrices are row-major with rows separated by ' ; '.
"""
import itertools
import sys

import networkx as nx
import sympy as sp

z = sp.symbols("z")


def adj(n, edges):
    a = sp.zeros(n, n)
    for i, j in edges:
        a[i - 1, j - 1] = a[j - 1, i - 1] = 1
    return a


P2 = adj(2, [(1, 2)])
P3 = adj(3, [(1, 2), (2, 3)])
K3 = adj(3, [(1, 2), (2, 3), (1, 3)])
DIAG35 = sp.diag(3, 5)


def fmt(x):
    x = sp.nsimplify(x)
    return str(x) if x.is_Rational else str(sp.N(x, 17))


def vec(xs):
    return " ".join(fmt(x) for x in xs)


def mat(m):
    return " ; ".join(vec(m.row(i)) for i in range(m.rows))


def series(expr, degree):
    s = sp.series(expr, z, 0, degree + 1).removeO()
    return [sp.expand(s).coeff(z, k) for k in range(degree + 1)]


def column_mix(a, k):
    n = a.rows
    out = sp.zeros(n, n)
    for i in range(n):
        out[:, i] = (a ** k[i])[:, i]
    return out


def leibniz(m):
    n = m.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = sp.combinatorics.Permutation(list(perm)).signature()
        term = sign
        for i in range(n):
            term *= m[perm[i], i]
        total += term
    return total


def closed_walks(a, start, length):
    n = a.rows
    out = []

    def rec(walk):
        if len(walk) == length + 1:
            if walk[-1] == start:
                out.append(list(walk))
            return
        for v in range(n):
            if a[walk[-1], v] != 0:
                rec(walk + [v])

    rec([start])
    return out


def excursion_counts(a, u, i, j, length):
    n = a.rows
    total = 0

    def rec(walk):
        nonlocal total
        if len(walk) == length + 1:
            if walk[-1] == j:
                w = 1
                for s, t in zip(walk, walk[1:]):
                    w *= a[s, t]
                total += w
            return
        if len(walk) > 1 and walk[-1] in u:
            return
        for v in range(n):
            if a[walk[-1], v] != 0:
                rec(walk + [v])

    rec([i])
    return total


def star(g, u, copies):
    n = g.rows
    u0 = [x - 1 for x in u]
    rest = [x for x in range(n) if x not in u0]
    dim = len(u0) + copies * len(rest)
    def pos(v, c):
        return u0.index(v) if v in u0 else len(u0) + c * len(rest) + rest.index(v)
    m = sp.zeros(dim, dim)
    for c in range(copies):
        for i in range(n):
            for j in range(n):
                if g[i, j] != 0:
                    m[pos(i, c), pos(j, c)] = g[i, j]
    return m


def main():
    out = []
    put = lambda k, v: out.append(f"{k}: {v}")

    put("eigenvalues P2", vec(sorted(P2.eigenvals(multiple=True))))
    put("eigenvalues K3", vec(sorted(K3.eigenvals(multiple=True))))
    put("det K3", fmt(leibniz(K3)))
    put("det P2", fmt(leibniz(P2)))
    put("power P2 2", mat(P2 ** 2))
    put("power K3 2", mat(K3 ** 2))
    put("column_mix P2 2,0", mat(column_mix(P2, [2, 0])))
    put("schur P2 u=1 z=1/2", fmt(((sp.eye(2) - P2 / 2).inv())[0, 0]))
    put("schur K3 u=1 z=1/4", fmt(((sp.eye(3) - K3 / 4).inv())[0, 0]))

    # P2 measure: hand eigenbasis, weight of lambda_sigma is det(P) sgn(sigma) prod p_{i sigma(i)}
    p = sp.Matrix([[1, 1], [-1, 1]]) / sp.sqrt(2)  # columns for eigenvalues -1, 1
    lam = [-1, 1]
    atoms = []
    for perm in itertools.permutations(range(2)):
        sign = sp.combinatorics.Permutation(list(perm)).signature()
        w = p.det() * sign
        for i in range(2):
            w *= p[i, perm[i]]
        atoms.append((tuple(lam[perm[i]] for i in range(2)), sp.simplify(w)))
    for point, w in sorted(atoms):
        put("measure P2 atom " + vec(point), fmt(w))

    put("moment P2 2,0", fmt(column_mix(P2, [2, 0]).det()))
    put("moment P2 1,1", fmt(column_mix(P2, [1, 1]).det()))
    put("oracle P2 1,0", fmt(sum(w * pt[0] for pt, w in atoms)))
    put("moment diag35 2,1", fmt(column_mix(DIAG35, [2, 1]).det()))
    put("marginal K3 1", vec([(K3 ** k)[0, 0] for k in range(5)]))
    put("marginal diag35 2", vec([(DIAG35 ** k)[1, 1] for k in range(4)]))

    def cov(a):
        n = a.rows
        mean = [column_mix(a, [1 if t == i else 0 for t in range(n)]).det() for i in range(n)]
        c = sp.zeros(n, n)
        for i in range(n):
            for j in range(n):
                k = [0] * n
                k[i] += 1
                k[j] += 1
                c[i, j] = column_mix(a, k).det() - mean[i] * mean[j]
        return c

    put("covariance P2", mat(cov(P2)))
    put("covariance K3", mat(cov(K3)))

    def powcov(a, i, j, k):
        n = a.rows
        both = [0] * n
        both[i] = both[j] = k
        ei = [k if t == i else 0 for t in range(n)]
        ej = [k if t == j else 0 for t in range(n)]
        return column_mix(a, both).det() - column_mix(a, ei).det() * column_mix(a, ej).det()

    put("power_covariance P2 1 2 1", fmt(powcov(P2, 0, 1, 1)))
    put("power_covariance K3 1 2 2", fmt(powcov(K3, 0, 1, 2)))

    # cumulants by Moebius inversion over set partitions
    def moment_u(a, block):
        k = [1 if t in block else 0 for t in range(a.rows)]
        return column_mix(a, k).det()

    def cumulant(a, u):
        total = 0
        for part in sp.utilities.iterables.multiset_partitions(list(u)):
            b = len(part)
            term = (-1) ** (b - 1) * sp.factorial(b - 1)
            for blk in part:
                term *= moment_u(a, blk)
            total += term
        return total

    put("cumulant K3 1,2,3", fmt(cumulant(K3, [0, 1, 2])))
    put("cumulant P2 1,2", fmt(cumulant(P2, [0, 1])))

    put("analytic_minor K3 x^2 u=1,2", fmt((K3 ** 2)[:2, :2].det()))
    put("analytic_minor P2 1+x u=1,2", fmt((sp.eye(2) + P2).det()))
    put("trace P2 x^2 u=1", fmt((P2 ** 2)[0, 0]))
    put("trace K3 x^2 u=all", fmt((K3 ** 2).trace()))
    put("charpoly P2 x u=1,2", vec(reversed(sp.Poly((z * sp.eye(2) - P2).det(), z).all_coeffs())))
    put("charpoly K3 x^2 u=1,2", vec(reversed(sp.Poly((z * sp.eye(2) - (K3 ** 2)[:2, :2]).det(), z).all_coeffs())))
    put("slater P2 u=1 v=1", fmt(p[0, 0] ** 2))
    put("multivariate_marginal P2 s=1,2 t=1,2", fmt(p.det() * p[0, 0] * p[1, 1]))

    s13 = star(P2, [1], 3)
    put("star P2 u=1 n=3 degrees", vec(sorted(sum(s13.row(i)) for i in range(s13.rows))))
    s_mid = star(P3, [2], 2)
    put("star P3 u=2 n=2 degrees", vec(sorted(sum(s_mid.row(i)) for i in range(s_mid.rows))))
    for n in (1, 2, 5):
        put(f"scaled K3 u=1 k=2 n={n}", fmt((star(K3, [1], n) ** 2)[0, 0] / n))
    d = P3[[0, 2], [1]] * P3[[1], [0, 2]]
    put("limit D P3 u=1,3", mat(d))
    put("limit P3 u=1,3 k=2,2", fmt(d.det()))
    put("mgf D=1 z=0.1", fmt(1 / (1 - sp.Rational(1, 100))))

    for name, a in (("P2", P2), ("K3", K3)):
        put(f"cycles {name}", str(len(list(nx.simple_cycles(nx.DiGraph(sp.matrix2numpy(a, dtype=int)))))))

    L = 10
    zeta_k3 = series(1 / (1 - 3 * z**2 - 2 * z**3), L)
    put("zeta K3", vec(zeta_k3))
    put("zeta P2", vec(series(1 / (1 - z**2), L)))
    put("mobius K3", vec(series((sp.eye(3) - z * K3).det(), L)))
    put("hike count K3 L=2", fmt(sum(zeta_k3[:3])))
    put("hike count K3 L=3", fmt(sum(zeta_k3[:4])))
    put("hike count P2 L=4", fmt(sum(series(1 / (1 - z**2), 4))))
    put("excursion K3 u=1", vec([excursion_counts(K3, {0}, 0, 0, k) if k else 0 for k in range(L + 1)]))
    put("excursion P2 u=1", vec([excursion_counts(P2, {0}, 0, 0, k) if k else 0 for k in range(L + 1)]))
    put("ru K3 u=1", vec(series((1 - z**2) / (1 - 3 * z**2 - 2 * z**3), L)))
    put("resolvent K3 u=1,2 z^2", mat((K3 ** 2)[:2, :2]))

    def visit_series(a, i, degree):
        coeffs = [sp.Integer(0)] * (degree + 1)
        for k in range(1, degree + 1):
            for w in closed_walks(a, i, k):
                coeffs[k] += sp.Rational(1, sum(1 for v in w[1:] if v == i))
        return coeffs

    put("log ru P2 u=1", vec(visit_series(P2, 0, 8)))
    put("log ru K3 u=1", vec(visit_series(K3, 0, 6)))
    for name, a in (("P2", P2), ("K3", K3)):
        m = sum((a ** k)[0, 0] * z**k for k in range(L + 1))
        put(f"boolean {name} 1", vec(series(1 - 1 / m, L)))
    put("trace R K3", vec([(K3 ** k).trace() for k in range(L + 1)]))

    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
