"""Small explicit group constructions used by gen_catalog.py."""
from math import gcd
from itertools import product

class Grp:
    """Explicit group: identity, mul, generators (hashable elements)."""
    def __init__(self, e, mul, gens, label):
        self.e, self.mul, self.gens, self.label = e, mul, gens, label
    def elements(self, cap=5000):
        seen={self.e}; fr=[self.e]
        while fr:
            nf=[]
            for x in fr:
                for s in self.gens:
                    y=self.mul(s,x)
                    if y not in seen:
                        seen.add(y); nf.append(y)
                        if len(seen)>cap: return None
            fr=nf
        return seen
    def eorder(self, x):
        k=1; y=x
        while y!=self.e: y=self.mul(y,x); k+=1
        return k

def metacyclic(n,m,k,t):
    # <a,b | a^n, b^m = a^t, b a b^-1 = a^k>, elements (i,j) = a^i b^j
    kp=[pow(k,j,n) for j in range(m)]
    def mul(x,y):
        i=(x[0]+y[0]*kp[x[1]])%n; j=x[1]+y[1]
        if j>=m: j-=m; i=(i+t)%n
        return (i,j)
    return Grp((0,0),mul,[(1%n,0),(0,1%m)],f"metacyclic({n},{m},{k},{t})")

def metacyclic_all(N):
    for n in range(1,N+1):
        if N%n: continue
        m=N//n
        for k in range(n if n>1 else 1):
            if n>1 and gcd(k,n)!=1: continue
            if n>1 and pow(k,m,n)!=1: continue
            for t in range(n):
                if (t*(k-1))%n==0:
                    yield metacyclic(n,m,k if n>1 else 0,t)

def matmul(A,B,n):
    r=len(A)
    return tuple(tuple(sum(A[i][l]*B[l][j] for l in range(r))%n for j in range(r)) for i in range(r))
def matvec(A,v,n):
    return tuple(sum(A[i][l]*v[l] for l in range(len(v)))%n for i in range(len(v)))

def semidirect(n,r,K,acts,label):
    """Z_n^r x| K, K generator s acts by matrix acts[s_index]. Returns None if not a hom."""
    I=tuple(tuple(int(i==j) for j in range(r)) for i in range(r))
    phi={K.e:I}; fr=[K.e]
    while fr:
        nf=[]
        for g in fr:
            for s,A in zip(K.gens,acts):
                h=K.mul(s,g); M=matmul(A,phi[g],n)
                if h in phi:
                    if phi[h]!=M: return None
                else: phi[h]=M; nf.append(h)
        fr=nf
    zero=tuple([0]*r)
    def mul(x,y):
        v=matvec(phi[x[1]],y[0],n)
        return (tuple((a+b)%n for a,b in zip(x[0],v)), K.mul(x[1],y[1]))
    gens=[(tuple(int(i==j) for j in range(r)),K.e) for i in range(r)]+[(zero,s) for s in K.gens]
    return Grp((zero,K.e),mul,gens,label)

def perm_group(gens,label):
    n=len(gens[0])
    return Grp(tuple(range(n)), lambda p,q: tuple(p[q[i]] for i in range(n)), [tuple(g) for g in gens], label)

def sl23():
    def mul(A,B): return matmul(A,B,3)
    return Grp(((1,0),(0,1)),mul,[((1,1),(0,1)),((0,1),(2,0))],"SL(2,3)")
def a4():
    return perm_group([(1,0,3,2),(1,2,0,3)],"A4")
