import json

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from fapk.pkg.bench.choices import ReportFormat
from fapk.pkg.common.exceptions import (
    InstanceFormatError, InstanceValidationError
)
from fapk.pkg.model.fileformat import read_instance
from fapk.pkg.search.bnb import solve
from fapk.pkg.search.choices import SearchMode, Strategy
from fapk.pkg.search.serializers import (
    SearchConfigSerializer, SearchResultSerializer
)


class Command(BaseCommand):
    help = 'Solve one instance file with Branch&Bound.'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('instance')
        parser.add_argument('--mode', choices=SearchMode.values(),
                            default=SearchMode.AvSel.value)
        parser.add_argument('--strategy', choices=Strategy.values(),
                            default=Strategy.Async.value)
        parser.add_argument('--budget', type=float, default=None,
                            help='Seconds, FAPK_SOLVE_BUDGET when omitted')
        parser.add_argument('--unlimited', action='store_true',
                            help='Search until the tree is exhausted')
        parser.add_argument('--no-cart8', action='store_true')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--rr-gap', type=int, default=None)
        parser.add_argument('--format', choices=(ReportFormat.Json.value,
                                                 ReportFormat.Text.value),
                            default=ReportFormat.Text.value)

    def handle(self, *args, **options):
        budget = options['budget']
        if budget is None and not options['unlimited']:
            budget = settings.FAPK_SOLVE_BUDGET
        data = {
            'mode': options['mode'], 'strategy': options['strategy'],
            'budget': budget, 'cart8': not options['no_cart8'],
            'seed': options['seed'],
        }
        if options['rr_gap'] is not None:
            data['rr_gap'] = options['rr_gap']
        try:
            with open(options['instance']) as f:
                instance = read_instance(f.read())
            serializer = SearchConfigSerializer(data=data)
            serializer.is_valid(raise_exception=True)
        except (OSError, InstanceFormatError, InstanceValidationError,
                ValidationError) as e:
            raise CommandError(str(e), returncode=2)

        result = solve(instance, serializer.save())
        if options['format'] == ReportFormat.Json.value:
            self.stdout.write(json.dumps(
                SearchResultSerializer(result).data, indent=2))
            return
        self.stdout.write(
            '%d/%d links assigned (%s), %d blockages, %d nodes, '
            '%d filtered (%d site values), best_disp=%s, %.2fs' % (
                result.assigned_links, result.link_count, result.stop_reason,
                result.blockages, result.nodes, result.filtered,
                result.filtered_sites, result.best_disp, result.elapsed))
