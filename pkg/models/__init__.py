# Import models for easier access
from models.quiver import Quiver, VertexPermutation
from models.mutation_class import MutationClass, MutationEdge, Orbit
from models.relations import ClusterTiltedAlgebra, PathClassTable, RelationSet
from models.complexes import GoodMutationVerdict, TiltingCandidate, TwoTermComplex
from models.polynomial import IntPolynomial
