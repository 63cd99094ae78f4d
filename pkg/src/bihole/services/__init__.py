"""
Init services
"""
from .graph import GraphService
from .graph6 import Graph6Service
from .invariant import InvariantService
from .hamilton import HamiltonService
from .held_karp import HeldKarpService
from .rotation import RotationService
from .theorem import TheoremService, GraphProfile
from .enumeration import EnumerationService
from .verification import VerificationService
from .sharpness import SharpnessService
