from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from fapk.pkg.bench.choices import ReportFormat, ScenarioGroup
from fapk.pkg.bench.matrix import build_instances, run_matrix
from fapk.pkg.bench.renderers import emit
from fapk.pkg.bench.serializers import BenchOptionsSerializer
from fapk.pkg.common.exceptions import GeneratorParamsError
from fapk.pkg.search.choices import SearchMode, Strategy


def _split(value):
    return [item.strip() for item in value.split(',') if item.strip()]


class Command(BaseCommand):
    help = 'Run the mode x strategy x budget matrix on generated scenarios.'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--groups', default=','.join(
            ScenarioGroup.values()))
        parser.add_argument('--budgets', default=None,
                            help='Comma separated seconds')
        parser.add_argument('--modes', default=','.join(SearchMode.values()))
        parser.add_argument('--strategies',
                            default=','.join(Strategy.values()))
        parser.add_argument('--per-group', type=int, default=None)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--no-cart8', action='store_true')
        parser.add_argument('--out', default=None,
                            help='Output file, stdout when omitted')
        parser.add_argument('--format', choices=ReportFormat.values(),
                            default=None,
                            help='Defaults to the --out extension, else csv')

    def handle(self, *args, **options):
        budgets = options['budgets']
        serializer = BenchOptionsSerializer(data={
            'groups': _split(options['groups']),
            'budgets': _split(budgets) if budgets else list(
                settings.FAPK_DEFAULT_BUDGETS),
            'modes': _split(options['modes']),
            'strategies': _split(options['strategies']),
            'per_group': options['per_group'],
            'seed': options['seed'],
        })
        try:
            serializer.is_valid(raise_exception=True)
        except ValidationError as e:
            raise CommandError(str(e.detail), returncode=2)
        data = serializer.validated_data

        try:
            instances = build_instances(
                [ScenarioGroup(g) for g in data['groups']],
                per_group=data['per_group'], seed=data['seed'])
        except GeneratorParamsError as e:
            raise CommandError(str(e), returncode=3)

        table = run_matrix(
            instances, data['budgets'],
            [SearchMode(m) for m in data['modes']],
            [Strategy(s) for s in data['strategies']],
            seed=data['seed'], cart8=not options['no_cart8'])

        report_format = options['format'] or self._format_for(options['out'])
        report = emit(table, report_format)
        if options['out']:
            with open(options['out'], 'w') as f:
                f.write(report)
            self.stdout.write('Wrote %d rows to %s' % (len(table),
                                                       options['out']))
        else:
            self.stdout.write(report, ending='')

    @staticmethod
    def _format_for(path):
        if path:
            extension = path.rsplit('.', 1)[-1].lower()
            if extension in ReportFormat.values():
                return extension
            if extension == 'txt':
                return ReportFormat.Text.value
        return ReportFormat.Csv.value
