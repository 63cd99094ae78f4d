"""
Init models
"""
from .graph import Graph
from .hole import HoleWitness, CoverageProfile, HoleNumberCertificate
from .hamilton_sequence import HamiltonSequence, GiveUp
from .report import (
    TheoremOutcome,
    ConditionReport,
    TheoremTally,
    VerificationReport,
    SharpnessClaim,
    SharpnessAudit
)
