import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "plates_core.settings")
django.setup()
