# Regenerates the bundled b-files from their defining formulas.
import os
from math import comb
from fractions import Fraction

OUT=os.path.dirname(os.path.abspath(__file__))
def fib(n):
    a,b=0,1
    for _ in range(n): a,b=b,a+b
    return a
def lucas(n):
    a,b=2,1
    for _ in range(n): a,b=b,a+b
    return a
def clf(n):
    s=sum(Fraction(comb(2*k,k)**2*comb(2*n-2*k,n-k)**2, comb(n,k)) for k in range(n+1))
    assert s.denominator==1
    return s.numerator
# CLF recurrence check: n^2 P(n) = 8(3n^2-3n+1)P(n-1) - 128(n-1)^2 P(n-2)
P=[clf(n) for n in range(12)]
for n in range(2,12): assert n*n*P[n]==8*(3*n*n-3*n+1)*P[n-1]-128*(n-1)**2*P[n-2]
def bern_list(N):
    B=[Fraction(1)]
    for m in range(1,N+1):
        B.append(-sum(comb(m+1,k)*B[k] for k in range(m))/(m+1))
    return B
def euler_abs(N):
    E=[1]
    for m in range(1,N+1):
        E.append(-sum(comb(2*m,2*k)*E[k] for k in range(m)))
    return [abs(x) for x in E]
def lp(N):
    def mul(A,B): return [[sum(A[i][k]*B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    M=[[0,1,0],[0,0,1],[1,1,0]]; P=[[1,0,0],[0,1,0],[0,0,1]]; out=[0]
    for n in range(1,N+1):
        P=mul(P,M); A=[[P[i][j]-(i==j) for j in range(3)] for i in range(3)]
        d=A[0][0]*(A[1][1]*A[2][2]-A[1][2]*A[2][1])-A[0][1]*(A[1][0]*A[2][2]-A[1][2]*A[2][0])+A[0][2]*(A[1][0]*A[2][1]-A[1][1]*A[2][0])
        out.append(abs(d))
    return out
B=bern_list(602)
specs={
 'A000032':('Lucas numbers L(n)', 0, 100, lucas),
 'A002895':('Domb numbers', 0, 60, lambda n: sum(comb(n,k)**2*comb(2*k,k)*comb(2*n-2*k,n-k) for k in range(n+1))),
 'A005259':('Apery numbers sum C(n,k)^2 C(n+k,k)^2', 0, 60, lambda n: sum(comb(n,k)**2*comb(n+k,k)**2 for k in range(n+1))),
 'A005258':('Apery numbers sum C(n,k)^2 C(n+k,k)', 0, 60, lambda n: sum(comb(n,k)**2*comb(n+k,k) for k in range(n+1))),
 'A005725':('Quadrinomial coefficients [x^n](1+x+x^2+x^3)^n', 0, 100, lambda n: sum(comb(n,j)*comb(n,n-2*j) for j in range(n//2+1))),
 'A054783':('Fibonacci(n^2)', 0, 40, lambda n: fib(n*n)),
 'A053175':('Catalan-Larcombe-French numbers', 0, 220, clf),
 'A001850':('Central Delannoy numbers', 0, 100, lambda n: sum(comb(n,k)*comb(n+k,k) for k in range(n+1))),
 'A000364':('Euler (secant) numbers |E_2n|', 0, 200, None),
 'A006953':('Denominator of B_2n/(2n)', 1, 300, lambda n: (B[2*n]/(2*n)).denominator),
 'A001067':('Numerator of B_2n/(2n)', 1, 300, lambda n: (B[2*n]/(2*n)).numerator),
 'A001945':('|det(M^n - I)| for the companion matrix of x^3-x-1', 0, 200, None),
 'A010122':('Continued fraction for sqrt(13)', 0, 120, lambda n: 3 if n==0 else (6 if n%5==0 else 1)),
}
E=euler_abs(200); L=lp(200)
for a,(title,lo,hi,f) in specs.items():
    if a=='A000364': vals={n:E[n] for n in range(lo,hi+1)}
    elif a=='A001945': vals={n:L[n] for n in range(lo,hi+1)}
    else: vals={n:f(n) for n in range(lo,hi+1)}
    with open(os.path.join(OUT,'b'+a[1:]+'.txt'),'w') as fh:
        fh.write(f'# {a} {title}\n# n = {lo}..{hi}\n')
        for n in range(lo,hi+1): fh.write(f'{n} {vals[n]}\n')

