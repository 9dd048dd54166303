"""designforge: symmetric (v,k,lambda) designs of affine type.

Constructions and verification of the concrete designs, the arithmetic
feasibility screens, and the bounded elimination searches that together
reproduce the classification of flag-transitive point-primitive symmetric
designs with prime lambda and affine automorphism group.
"""

__version__ = "0.1.0"
