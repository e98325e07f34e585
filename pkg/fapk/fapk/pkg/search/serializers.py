from django.conf import settings
from rest_framework import serializers

from fapk.pkg.search.choices import SearchMode, StopReason, Strategy
from fapk.pkg.search.config import SearchConfig


class SearchConfigSerializer(serializers.Serializer):
    mode = serializers.ChoiceField(choices=SearchMode.choices(),
                                   default=SearchMode.AvSel.value)
    strategy = serializers.ChoiceField(choices=Strategy.choices(),
                                       default=Strategy.Async.value)
    budget = serializers.FloatField(required=False, allow_null=True,
                                    default=None)
    rr_gap = serializers.IntegerField(required=False, min_value=0)
    cart8 = serializers.BooleanField(required=False, default=True)
    seed = serializers.IntegerField(required=False, allow_null=True,
                                    min_value=0, default=None)

    def validate_budget(self, value):
        if value is not None and value <= 0:
            raise serializers.ValidationError(
                'Time budget must be a positive number of seconds')
        return value

    def validate_rr_gap(self, value):
        if value > settings.FAPK_RR_CAP:
            raise serializers.ValidationError(
                'Receiver gap cannot exceed %d' % settings.FAPK_RR_CAP)
        return value

    def create(self, validated_data):
        return SearchConfig.from_settings(**validated_data)


class SearchResultSerializer(serializers.Serializer):
    link_count = serializers.IntegerField()
    assigned_links = serializers.IntegerField()
    solved = serializers.BooleanField()
    blockages = serializers.IntegerField()
    best_disp = serializers.IntegerField(allow_null=True)
    nodes = serializers.IntegerField()
    backtracks = serializers.IntegerField()
    filtered = serializers.IntegerField()
    filtered_sites = serializers.IntegerField()
    solutions = serializers.IntegerField()
    elapsed = serializers.FloatField()
    stop_reason = serializers.ChoiceField(choices=StopReason.choices())
    cart8_warnings = serializers.IntegerField()
    assignment = serializers.SerializerMethodField()

    def get_assignment(self, obj):
        return {str(path): frequency
                for path, frequency in sorted(obj.assignment.items())}
