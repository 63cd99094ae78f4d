"""
Verification and audit report models
"""


class TheoremOutcome:
    """
    One theorem evaluated on one graph

    :param hypothesis - bool or None | None when the graph is out of the theorem's range
    :param conclusion - bool or None | None when not evaluated
    """

    __slots__ = ('hypothesis', 'conclusion')

    def __init__(self, hypothesis, conclusion=None):
        self.hypothesis = hypothesis
        self.conclusion = conclusion

    @property
    def in_range(self):
        """
        Whether the theorem applies to the graph's order at all
        """
        return self.hypothesis is not None

    @property
    def consistent(self):
        """
        not hypothesis or conclusion
        """
        return not self.hypothesis or bool(self.conclusion)

    def __repr__(self):
        return f'<TheoremOutcome hypothesis {self.hypothesis}, conclusion {self.conclusion}>'


class ConditionReport:
    """
    Invariants of one graph and the theorems evaluated on it

    :param graph_id - str | enumeration mask or corpus line reference
    :param graph6 - str
    :param n, delta, sigma2, kappa, alpha_tilde - invariant values (alpha_tilde None when n < 2)
    :param outcomes - dict TheoremId -> TheoremOutcome
    """

    # pylint: disable=too-many-arguments
    def __init__(self, graph_id, graph6, n, delta, sigma2, kappa, alpha_tilde, outcomes):
        self.graph_id = graph_id
        self.graph6 = graph6
        self.n = n
        self.delta = delta
        self.sigma2 = sigma2
        self.kappa = kappa
        self.alpha_tilde = alpha_tilde
        self.outcomes = outcomes

    @property
    def consistent(self):
        """
        Every evaluated theorem is consistent
        """
        return all(outcome.consistent for outcome in self.outcomes.values())

    def sort_key(self):
        """
        Key giving counterexample lists a deterministic order
        """
        return self.n, self.graph6, self.graph_id

    def __repr__(self):
        return f'<ConditionReport {self.graph_id} {self.graph6}>'


class TheoremTally:
    """
    Per-theorem counters of a sweep; merging is commutative
    """

    FIELDS = ('in_range', 'out_of_range', 'hypothesis_true', 'conclusion_true',
              'conclusion_evaluated', 'counterexamples')

    def __init__(self, theorem):
        self.theorem = theorem
        self.in_range = 0
        self.out_of_range = 0
        self.hypothesis_true = 0
        self.conclusion_true = 0
        self.conclusion_evaluated = 0
        self.counterexamples = 0

    def record(self, outcome):
        """
        Count one TheoremOutcome
        """
        if not outcome.in_range:
            self.out_of_range += 1
            return
        self.in_range += 1
        if outcome.hypothesis:
            self.hypothesis_true += 1
        if outcome.conclusion is not None:
            self.conclusion_evaluated += 1
            if outcome.conclusion:
                self.conclusion_true += 1
        if not outcome.consistent:
            self.counterexamples += 1

    def merge(self, other):
        """
        Add another tally of the same theorem into this one
        """
        for name in self.FIELDS:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self

    def __repr__(self):
        return f'<TheoremTally {self.theorem.value} counterexamples {self.counterexamples}>'


class VerificationReport:
    """
    Result of a corpus sweep

    :param corpus - str | corpus description
    :param theorems - list of TheoremId
    :param seed - int
    :param survey - bool
    """

    def __init__(self, corpus, theorems, seed, survey=False):
        self.corpus = corpus
        self.theorems = list(theorems)
        self.seed = seed
        self.survey = survey
        self.graphs_scanned = 0
        self.tallies = {theorem: TheoremTally(theorem) for theorem in self.theorems}
        self.counterexamples = []
        self.parse_errors = []
        self.self_test_failures = 0
        self.wall_clock_seconds = None

    @property
    def all_consistent(self):
        """
        True iff no counterexample was found
        """
        return not self.counterexamples

    @property
    def malformed_lines(self):
        """
        Number of corpus lines that failed to decode
        """
        return len(self.parse_errors)

    def merge(self, other):
        """
        Fold a partial report of the same sweep into this one
        """
        self.graphs_scanned += other.graphs_scanned
        for theorem, tally in other.tallies.items():
            self.tallies[theorem].merge(tally)
        self.counterexamples.extend(other.counterexamples)
        self.parse_errors.extend(other.parse_errors)
        self.self_test_failures += other.self_test_failures
        return self

    def finalize(self):
        """
        Sort lists so the report does not depend on work order
        """
        self.counterexamples.sort(key=lambda report: report.sort_key())
        self.parse_errors.sort(key=lambda error: error[0])
        return self

    def __repr__(self):
        return f'<VerificationReport {self.corpus}, scanned {self.graphs_scanned}>'


class SharpnessClaim:
    """
    One stated (in)equality about a sharpness construction

    :param name - str
    :param expected - str | the stated relation
    :param computed - str | the computed values
    :param holds - bool
    :param asserted - bool | False where the claim is only reported descriptively
    """

    __slots__ = ('name', 'expected', 'computed', 'holds', 'asserted')

    # pylint: disable=too-many-arguments
    def __init__(self, name, expected, computed, holds, asserted=True):
        self.name = name
        self.expected = expected
        self.computed = computed
        self.holds = holds
        self.asserted = asserted

    def __repr__(self):
        return f'<SharpnessClaim {self.name}: {self.holds}>'


class SharpnessAudit:
    """
    Exact invariants of a sharpness graph and the claims checked against them
    """

    # pylint: disable=too-many-arguments
    def __init__(self, family, params, graph6, n, sigma2, alpha_tilde, kappa,
                 hamiltonian, hamiltonian_connected, claims):
        self.family = family
        self.params = params
        self.graph6 = graph6
        self.n = n
        self.sigma2 = sigma2
        self.alpha_tilde = alpha_tilde
        self.kappa = kappa
        self.hamiltonian = hamiltonian
        self.hamiltonian_connected = hamiltonian_connected
        self.claims = claims

    @property
    def mismatches(self):
        """
        Asserted claims that do not hold
        """
        return [claim for claim in self.claims if claim.asserted and not claim.holds]

    def __repr__(self):
        return f'<SharpnessAudit family {self.family} {self.params}>'
