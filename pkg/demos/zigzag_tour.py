"""
From tableaux to signed permutations
====================================

Build the two small tableaux used throughout the tests, follow the zigzag
paths, then check on all of B_4 that the tableau weight and the
permutation statistics agree.
"""
from btableaux import signedperm as sp
from btableaux.render import render_tableau
from btableaux.tableaux import enumerate_ptb, parse_tableau, zigzag

# a shifted tableau: border word, then one line per row, '*' on diagonal rows
T = parse_tableau("hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n")
print(render_tableau(T))
print("zigzag image:", zigzag(T))
print("weight exponents (y, t, q):", T.weight_exponents())

pi = zigzag(T)
print("fwex, neg, cro of the image:", sp.fwex(pi), sp.negatives(pi), sp.crossings(pi))

# exhaustive comparison on n = 4
bad = [T for T in enumerate_ptb(4)
       if T.weight_exponents() != (sp.fwex(zigzag(T)), sp.negatives(zigzag(T)), sp.crossings(zigzag(T)))]
print("tableaux of size 4 whose statistics disagree:", len(bad))
