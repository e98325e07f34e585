from fapk.pkg.common.choices import ChoiceStringEnum


class ScenarioGroup(ChoiceStringEnum):
    G01 = 'g01'
    G10 = 'g10'
    G20 = 'g20'
    G30 = 'g30'


class ReportFormat(ChoiceStringEnum):
    Csv = 'csv'
    Json = 'json'
    Text = 'text'
