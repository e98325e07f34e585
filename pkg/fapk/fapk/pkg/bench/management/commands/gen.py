from django.core.management.base import BaseCommand, CommandError

from fapk.pkg.bench.choices import ScenarioGroup
from fapk.pkg.bench.generator import ScenarioParams, generate_instance
from fapk.pkg.common.exceptions import GeneratorParamsError
from fapk.pkg.model.fileformat import write_instance


class Command(BaseCommand):
    help = 'Generate a random instance shaped after a scenario group.'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--group', choices=ScenarioGroup.values(),
                            default=ScenarioGroup.G10.value)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('-o', '--output', default=None,
                            help='Output file, stdout when omitted')
        parser.add_argument('--links', type=int, default=None)
        parser.add_argument('--sites', type=int, default=None)
        parser.add_argument('--cart8', type=int, default=None)
        parser.add_argument('--far-field-probability', type=float,
                            default=None)
        parser.add_argument('--rr-spread', type=float, default=None)

    def handle(self, *args, **options):
        sizes = {
            key: options[key] for key in ('links', 'sites', 'cart8')
            if options[key] is not None
        }
        overrides = {}
        if options['far_field_probability'] is not None:
            overrides['far_field_probability'] = \
                options['far_field_probability']
        if options['rr_spread'] is not None:
            overrides['rr_spread'] = options['rr_spread']

        try:
            params = ScenarioParams.for_group(
                options['group'], seed=options['seed'], **overrides)
            if sizes:
                params = params.with_sizes(**sizes)
            instance = generate_instance(params)
        except GeneratorParamsError as e:
            raise CommandError(str(e), returncode=3)

        text = write_instance(instance)
        if options['output']:
            with open(options['output'], 'w') as f:
                f.write(text)
            self.stdout.write('Wrote %r to %s' % (instance, options['output']))
        else:
            self.stdout.write(text, ending='')
