from django.apps import AppConfig


class ExperimentAppConfig(AppConfig):
    name = 'experiment'
    verbose_name = "Force-vs-density experiment pipelines"
