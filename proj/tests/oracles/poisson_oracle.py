"""Independent reference values for Poisson integrals (scipy adaptive quadrature).

Run with python3; the printed values are frozen into tests/unit/boundary_integrals_test.cpp.
"""
import math
from scipy import integrate

def omega(n):
    return 2 * math.pi ** (n / 2) / math.gamma(n / 2)

def poisson(x, yp):
    n = len(x)
    d2 = sum((x[i] - yp[i]) ** 2 for i in range(n - 1)) + x[-1] ** 2
    return 2 * x[-1] / (omega(n) * d2 ** (n / 2))

opts = dict(epsabs=1e-14, epsrel=1e-13, limit=400)

def disk_n3(x, radius):
    f = lambda th, r: poisson(x, (r * math.cos(th), r * math.sin(th))) * r
    return integrate.nquad(f, [[0, 2 * math.pi], [0, radius]], opts=[opts, opts])[0]

def gauss_n3(x, width):
    f = lambda th, r: poisson(x, (r * math.cos(th), r * math.sin(th))) * math.exp(-(r / width) ** 2) * r
    return integrate.nquad(f, [[0, 2 * math.pi], [0, 12 * width]], opts=[opts, opts])[0]

def gauss_n4(x, width):
    def f(ph, u, r):
        s = math.sqrt(max(0.0, 1 - u * u))
        y = (r * u, r * s * math.cos(ph), r * s * math.sin(ph))
        return poisson(x, y) * math.exp(-(r / width) ** 2) * r * r
    o = dict(epsabs=1e-12, epsrel=1e-11, limit=200)
    return integrate.nquad(f, [[0, 2 * math.pi], [-1, 1], [0, 10 * width]], opts=[o, o, o])[0]

print("disk_n3 (0.5,0.3,0.4) R=1:", repr(disk_n3((0.5, 0.3, 0.4), 1.0)))
print("disk_n3 (1.5,-0.5,0.25) R=1:", repr(disk_n3((1.5, -0.5, 0.25), 1.0)))
print("gauss_n3 (0.7,-0.2,0.5) w=1:", repr(gauss_n3((0.7, -0.2, 0.5), 1.0)))
print("gauss_n4 (0.3,0.2,-0.1,0.8) w=1:", repr(gauss_n4((0.3, 0.2, -0.1, 0.8), 1.0)))
