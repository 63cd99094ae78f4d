"""
Init schemas
"""
from .fields import Sigma2
from .graph import (
    InvariantsSchema,
    HoleWitnessSchema,
    HoleNumberCertificateSchema,
    HoleQuerySchema,
    HamiltonReportSchema
)
from .report import (
    TheoremTallySchema,
    ConditionReportSchema,
    VerificationReportSchema,
    SharpnessClaimSchema,
    SharpnessAuditSchema
)
from .run_config import RunConfigSchema
