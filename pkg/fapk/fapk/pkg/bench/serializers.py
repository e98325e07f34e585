from rest_framework import serializers

from fapk.pkg.bench.choices import ScenarioGroup
from fapk.pkg.search.choices import SearchMode, Strategy


class ResultRowSerializer(serializers.Serializer):
    group = serializers.CharField()
    n = serializers.IntegerField(allow_null=True)
    mode = serializers.CharField()
    strategy = serializers.CharField()
    budget = serializers.FloatField(allow_null=True)
    mean_links = serializers.FloatField()
    solved = serializers.IntegerField()
    blockages = serializers.FloatField()
    filtered = serializers.FloatField()
    elapsed = serializers.FloatField()


class SummaryRowSerializer(serializers.Serializer):
    budget = serializers.FloatField(allow_null=True)
    mode = serializers.CharField()
    strategy = serializers.CharField()
    mean_links = serializers.FloatField()


class BenchOptionsSerializer(serializers.Serializer):
    """Validates the options of the bench command."""
    groups = serializers.ListField(
        child=serializers.ChoiceField(choices=ScenarioGroup.choices()),
        min_length=1)
    budgets = serializers.ListField(
        child=serializers.FloatField(min_value=0.001), min_length=1)
    modes = serializers.ListField(
        child=serializers.ChoiceField(choices=SearchMode.choices()),
        min_length=1)
    strategies = serializers.ListField(
        child=serializers.ChoiceField(choices=Strategy.choices()),
        min_length=1)
    per_group = serializers.IntegerField(min_value=1, required=False,
                                         allow_null=True, default=None)
    seed = serializers.IntegerField(min_value=0, default=0)
