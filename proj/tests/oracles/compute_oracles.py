"""Extended-precision reference values frozen into the C++ test suites.

Everything here is evaluated with mpmath at 40 significant digits, directly
from the defining integrals or closed forms, independently of the C++ code.
Run:  python3 tests/oracles/compute_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40


def arcsin_pq(p, q, x):
    return mp.quad(lambda t: (1 - t**q) ** (-1 / p), [0, x])


def arsinh_pq(p, q, x):
    return mp.quad(lambda t: (1 + t**q) ** (-1 / p), [0, x])


def pi_pq(p, q):
    return 2 / q * mp.beta(1 - 1 / p, 1 / q)


def sin_pq(p, q, y):
    return mp.findroot(lambda x: arcsin_pq(p, q, x) - y, (mp.mpf(0), mp.mpf(1)),
                       solver="anderson")


def sinh_pq(p, q, y):
    return mp.findroot(lambda x: arsinh_pq(p, q, x) - y, (mp.mpf(0), mp.mpf(3)),
                       solver="anderson")


def alpha(c, q):
    return 2 * mp.sqrt(mp.pi) / (mp.e * q) ** (1 / q) * mp.root((q * (q + 4) + 8) / q**3 + c, 6)


def show(label, v):
    print(f"{label:48s} {mp.nstr(v, 20)}")


p, q = mp.mpf(5) / 2, mp.mpf(3)
print("== forward table (p=2.5, q=3)")
for x in ["0", "0.25", "0.5", "0.75", "1"]:
    x = mp.mpf(x)
    asn = arcsin_pq(p, q, x)
    acs = arcsin_pq(p, q, (1 - x**p) ** (1 / q))
    ash = arsinh_pq(p, q, x)
    print(mp.nstr(x, 5), mp.nstr(asn, 12), mp.nstr(acs, 12), mp.nstr(ash, 12))

print("== inverse table (p=2.5, q=3)")
for y in ["0.25", "0.5", "0.75", "1"]:
    y = mp.mpf(y)
    s = sin_pq(p, q, y)
    c = (1 - s**q) ** (1 / p)
    sh = sinh_pq(p, q, y)
    print(mp.nstr(y, 5), mp.nstr(s, 12), mp.nstr(c, 12), mp.nstr(sh, 12))

print("== special values")
show("lngamma(1/4)", mp.loggamma(mp.mpf(1) / 4))
show("beta(1/2,1/3)", mp.beta(mp.mpf(1) / 2, mp.mpf(1) / 3))
show("F(0.4,1/3;4/3;0.125)", mp.hyp2f1(mp.mpf(2) / 5, mp.mpf(1) / 3, mp.mpf(4) / 3, mp.mpf(1) / 8))
show("F(0.4,1/3;4/3;1)", mp.hyp2f1(mp.mpf(2) / 5, mp.mpf(1) / 3, mp.mpf(4) / 3, 1))
show("pi_{2.5,3}", pi_pq(p, q))
show("m_{2.5,3}", arsinh_pq(p, q, 1))
show("alpha(1/100,3)", alpha(mp.mpf(1) / 100, mp.mpf(3)))
show("alpha(1/30,3)", alpha(mp.mpf(1) / 30, mp.mpf(3)))
show("alpha(1/100,2)", alpha(mp.mpf(1) / 100, mp.mpf(2)))
k = (2 * mp.sqrt(mp.pi) * mp.gamma(mp.mpf(3) / 4) / mp.gamma(mp.mpf(1) / 4)) ** 2
show("dual lower p=2", mp.sqrt(3 * mp.pi))
show("dual upper p=2", mp.sqrt(3 * mp.pi + k))
x = mp.mpf(1)
alz = lambda c: mp.sqrt(mp.pi) * (x / mp.e) ** x * mp.root(8 * x**3 + 4 * x**2 + x + c, 6)
show("alzer lower x=1", alz(mp.mpf(1) / 100))
show("alzer upper x=1", alz(mp.mpf(1) / 30))
show("sinh_{2.5,3}(1)", sinh_pq(p, q, 1))
show("arcsin_{2,2}(0.5) = pi/6", mp.pi / 6)
show("arsinh(0.5)", mp.asinh(mp.mpf(1) / 2))
P = mp.mpf(2)
show("conj lower p=2", 2 ** (2 / P) * mp.sqrt(mp.pi) * mp.sqrt(mp.mpf(5) / 4 - 1 / P))
show("conj upper p=2", 2 ** (2 / P) * mp.sqrt(mp.pi) * (2 - 1 / P) ** (mp.mpf(3) / 2 - 1 / P)
     / (mp.sqrt(mp.e) * (mp.mpf(3) / 2 - 1 / P) ** (1 - 1 / P)))
show("m_{2,2} = asinh(1)", mp.asinh(1))
show("gamma(3/2)/gamma(1)", mp.gamma(mp.mpf(3) / 2))
show("kershaw lower x=1/2,s=1/2", (mp.mpf(1) / 2 + mp.mpf(1) / 4) ** (mp.mpf(1) / 2))
show("kershaw upper x=1/2,s=1/2", (mp.mpf(1) / 2 - mp.mpf(1) / 2 + mp.sqrt(mp.mpf(3) / 4)) ** (mp.mpf(1) / 2))
show("pi_{4/3,4}", pi_pq(mp.mpf(4) / 3, 4))
show("pi_{10,1.5}", pi_pq(10, mp.mpf(3) / 2))
