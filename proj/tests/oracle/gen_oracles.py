"""Independent high-precision reference values, frozen into tests/oracle_values.hpp.

Uses sympy (exact CG, exact Gram-Schmidt on the lattice) and mpmath (50-digit
matrix exponentials). Re-run only when adding cases:
    python3 tests/oracle/gen_oracles.py > tests/oracle_values.hpp
"""
import mpmath as mp
from sympy import Rational, S, sqrt, Matrix, nsimplify
from sympy.physics.wigner import clebsch_gordan

mp.mp.dps = 50


def h(x):
    return Rational(x, 2)


def fmt(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-5, max_fixed=5)


def cg_cases():
    cases = [(2, 2, 2, -2, 4, 0), (2, 2, 2, -2, 0, 0), (1, 1, 1, -1, 2, 0),
             (3, 1, 2, 0, 3, 1), (3, -1, 4, 2, 5, 1), (5, 3, 4, -2, 7, 1),
             (7, -3, 6, 4, 9, 1), (8, 2, 6, -4, 10, -2), (9, 5, 9, -5, 12, 0),
             (12, 4, 10, -6, 16, -2), (20, 6, 16, -6, 24, 0), (24, 24, 24, -24, 0, 0)]
    out = []
    for a, al, b, be, c, ga in cases:
        v = clebsch_gordan(h(a), h(b), h(c), h(al), h(be), h(ga))
        out.append((a, al, b, be, c, ga, fmt(mp.mpf(S(v).evalf(40)))))
    return out


def gram_schmidt_table(tj):
    # orthonormalise 1, m, m^2, ... on m = -j..j with exact arithmetic
    ms = [h(t) for t in range(-tj, tj + 1, 2)]
    basis = []
    for lam in range(tj + 1):
        v = Matrix([m ** lam for m in ms])
        for b in basis:
            v = v - (v.dot(b)) * b
        nrm = sqrt(v.dot(v))
        v = v / nrm
        if v[-1] < 0:
            v = -v
        basis.append(v)
    return [[fmt(mp.mpf(S(x).evalf(40))) for x in b] for b in basis]


def spin_mats(tj):
    n = tj + 1
    j = mp.mpf(tj) / 2
    jz = mp.zeros(n, n)
    jp = mp.zeros(n, n)
    for i in range(n):
        m = -j + i
        jz[i, i] = m
        if i + 1 < n:
            jp[i + 1, i] = mp.sqrt(j * (j + 1) - m * (m + 1))
    jm = jp.T
    jx = (jp + jm) / 2
    jy = (jp - jm) / (2j)
    return jx, jy, jz


def dmatrix(tj, beta):
    jx, jy, jz = spin_mats(tj)
    return mp.expm(-1j * beta * jy)


def dmat_cases():
    out = []
    for tj, beta in [(3, mp.mpf('0.7')), (4, mp.mpf('1.1')), (5, mp.mpf('2.3'))]:
        d = dmatrix(tj, beta)
        out.append((tj, fmt(beta), [[fmt(mp.re(d[r, c])) for c in range(tj + 1)] for r in range(tj + 1)]))
    return out


def char_trace(tj, lam, psi, table):
    # chi = i^lam sum_m e^{-i m psi} sqrt((2j+1)/(2lam+1)) f_lam(m), from the exact table
    tot = mp.mpc(0)
    for i in range(tj + 1):
        m = mp.mpf(-tj + 2 * i) / 2
        tot += mp.exp(-1j * m * psi) * mp.mpf(table[lam][i])
    return mp.re((1j) ** lam * mp.sqrt(mp.mpf(tj + 1) / (2 * lam + 1)) * tot)


def nj_mat(tj, th, ph):
    jx, jy, jz = spin_mats(tj)
    return mp.sin(th) * mp.cos(ph) * jx + mp.sin(th) * mp.sin(ph) * jy + mp.cos(th) * jz


def fop(tj, lam, th, ph, table):
    # f_lam(n.J) = sum_m f_lam(m) P_m, with P_m the Sylvester product in n.J
    n = tj + 1
    A = nj_mat(tj, th, ph)
    ms = [mp.mpf(-tj + 2 * i) / 2 for i in range(n)]
    acc = mp.zeros(n, n)
    for i, m in enumerate(ms):
        P = mp.eye(n)
        for r in ms:
            if r != m:
                P = P * (A - r * mp.eye(n)) / (m - r)
        acc += mp.mpf(table[lam][i]) * P
    return acc


def cmat(M):
    n = M.rows
    return ", ".join("{" + ", ".join("{%s, %s}" % (fmt(mp.re(M[r, c])), fmt(mp.im(M[r, c]))) for c in range(n)) + "}"
                     for r in range(n))


def coherent(tj, th, ph):
    jx, jy, jz = spin_mats(tj)
    top = mp.zeros(tj + 1, 1)
    top[tj] = 1
    return mp.expm(-1j * ph * jz) * (mp.expm(-1j * th * jy) * top)


def extra(tables):
    print("struct OpCase { int tj, lam; double theta, phi; std::vector<std::vector<std::complex<double>>> f; };")
    print("inline const std::vector<OpCase> fop = {")
    for tj, lam, th, ph in [(3, 2, '1.1', '0.4'), (4, 3, '2.2', '5.1'), (2, 1, '0.3', '2.0')]:
        print("  {%d, %d, %s, %s, {%s}}," % (tj, lam, th, ph, cmat(fop(tj, lam, mp.mpf(th), mp.mpf(ph), tables[tj]))))
    print("};\n")
    # exp(+i psi n.J)
    print("struct RotCase { int tj; double psi, theta, phi; std::vector<std::vector<std::complex<double>>> u; };")
    print("inline const std::vector<RotCase> corio = {")
    for tj, psi, th, ph in [(3, '2.4', '0.9', '1.7'), (4, '5.3', '2.0', '0.2')]:
        U = mp.expm(1j * mp.mpf(psi) * nj_mat(tj, mp.mpf(th), mp.mpf(ph)))
        print("  {%d, %s, %s, %s, {%s}}," % (tj, psi, th, ph, cmat(U)))
    print("};\n")
    # |D_{m m'}(beta about y)|^2 for flips
    print("struct FlipCase { int tj; double beta, extreme, next; };")
    print("inline const std::vector<FlipCase> flips = {")
    for tj, beta in [(6, '1.234'), (5, '2.7'), (2, '0.45'), (8, '1.9')]:
        d = dmatrix(tj, mp.mpf(beta))
        ext = abs(d[0, tj]) ** 2
        nxt = abs(d[1, tj - 1]) ** 2
        print("  {%d, %s, %s, %s}," % (tj, beta, fmt(ext), fmt(nxt)))
    print("};\n")
    # [D_{m m'}(alpha, pi/2, gamma)]^2
    print("struct SqCase { int tj, m2, mp2; double alpha, gamma; std::complex<double> value; };")
    print("inline const std::vector<SqCase> sqD = {")
    for tj, m2, mp2, al, ga in [(3, 1, -3, '0.3', '1.1'), (4, 2, 0, '2.0', '0.7'), (5, -1, 3, '1.4', '4.4')]:
        d = dmatrix(tj, mp.pi / 2)
        r, c = (m2 + tj) // 2, (mp2 + tj) // 2
        v = (mp.exp(-1j * (mp.mpf(m2) / 2 * mp.mpf(al) + mp.mpf(mp2) / 2 * mp.mpf(ga))) * d[r, c]) ** 2
        print("  {%d, %d, %d, %s, %s, {%s, %s}}," % (tj, m2, mp2, al, ga, fmt(mp.re(v)), fmt(mp.im(v))))
    print("};\n")
    # Q and W of a fixed spin-1 density matrix
    rho = mp.matrix([[mp.mpf(1) / 2, mp.mpc(1, 2) / 10, mp.mpf(1) / 20],
                     [mp.mpc(1, -2) / 10, mp.mpf(3) / 10, mp.mpc(0, 1) / 10],
                     [mp.mpf(1) / 20, mp.mpc(0, -1) / 10, mp.mpf(1) / 5]])
    print("inline const std::vector<std::vector<std::complex<double>>> rho1 = {%s};" % cmat(rho))
    print("struct PhaseCase { double theta, phi, Q, W; };")
    print("inline const std::vector<PhaseCase> phase1 = {")
    for th, ph in [('0.0', '0.0'), ('0.8', '2.1'), ('2.6', '4.9')]:
        th_, ph_ = mp.mpf(th), mp.mpf(ph)
        v = coherent(2, th_, ph_)
        Q = mp.re((v.H * rho * v)[0])
        Delta = mp.zeros(3, 3)
        for lam in range(3):
            Delta += mp.sqrt(2 * lam + 1) * fop(2, lam, th_, ph_, tables[2])
        Delta /= mp.sqrt(3)
        W = mp.re(sum((rho * Delta)[i, i] for i in range(3)))
        print("  {%s, %s, %s, %s}," % (th, ph, fmt(Q), fmt(W)))
    print("};\n")


def main():
    print("// generated by tests/oracle/gen_oracles.py (sympy exact + mpmath 50 digits)")
    print("#pragma once")
    print("#include <array>\n#include <complex>\n#include <vector>\n")
    print("namespace oracle {\n")
    print("struct CgCase { int a2, al2, b2, be2, c2, ga2; double value; };")
    print("inline const std::vector<CgCase> cg = {")
    for c in cg_cases():
        print("  {%d, %d, %d, %d, %d, %d, %s}," % c)
    print("};\n")
    print("struct ChebCase { int tj; std::vector<std::vector<double>> f; };")
    print("inline const std::vector<ChebCase> cheb = {")
    tables = {}
    for tj in [1, 2, 3, 4, 5, 6]:
        t = gram_schmidt_table(tj)
        tables[tj] = t
        rows = ", ".join("{" + ", ".join(r) + "}" for r in t)
        print("  {%d, {%s}}," % (tj, rows))
    print("};\n")
    print("struct DCase { int tj; double beta; std::vector<std::vector<double>> d; };")
    print("inline const std::vector<DCase> dmat = {")
    for tj, beta, d in dmat_cases():
        rows = ", ".join("{" + ", ".join(r) + "}" for r in d)
        print("  {%d, %s, {%s}}," % (tj, beta, rows))
    print("};\n")
    print("struct CharCase { int tj, lam; double psi, value; };")
    print("inline const std::vector<CharCase> chars = {")
    for tj, lam, psi in [(1, 1, '0.9'), (2, 1, '1.3'), (3, 2, '2.1'), (4, 3, '4.0'), (5, 5, '5.5'), (6, 4, '0.35')]:
        v = char_trace(tj, lam, mp.mpf(psi), tables[tj])
        print("  {%d, %d, %s, %s}," % (tj, lam, psi, fmt(v)))
    print("};\n")
    # |D_{mm'}|^2 for the angle-axis rotation psi about (Theta, Phi)
    print("struct ProbCase { int tj; double psi, Theta, Phi; std::vector<std::vector<double>> p; };")
    print("inline const std::vector<ProbCase> prob = {")
    for tj, psi, Th, Ph in [(2, '1.7', '0.6', '0.3'), (3, '2.9', '1.2', '4.0'), (4, '0.8', '2.5', '1.0')]:
        jx, jy, jz = spin_mats(tj)
        psi_, Th_, Ph_ = mp.mpf(psi), mp.mpf(Th), mp.mpf(Ph)
        nj = mp.sin(Th_) * mp.cos(Ph_) * jx + mp.sin(Th_) * mp.sin(Ph_) * jy + mp.cos(Th_) * jz
        D = mp.expm(-1j * psi_ * nj)
        rows = ", ".join("{" + ", ".join(fmt(abs(D[r, c]) ** 2) for c in range(tj + 1)) + "}" for r in range(tj + 1))
        print("  {%d, %s, %s, %s, {%s}}," % (tj, psi, Th, Ph, rows))
    print("};\n")
    extra(tables)
    print("}  // namespace oracle")


main()
