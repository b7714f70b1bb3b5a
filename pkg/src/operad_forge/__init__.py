"""Exact-arithmetic computer algebra for binary quadratic operads.

Modules:

- ``foundation``: rational vectors and row-reduced subspaces
- ``group_module``: the symmetric group on three letters and its group algebra
- ``weight_spaces``: the weight-3 spaces and the leaf-relabel action
- ``relation_dsl``: text syntax for relations and group-algebra vectors
- ``operad_calculus``: relation modules, rank, Koszul dual, companion operads
- ``tensor_closure``: symbolic tensor-product closure certificates
- ``algebra_instances``: structure-constant instances and counterexample search
- ``cli``: the ``operad-forge`` command-line front end
"""

__version__ = "0.1.0"
