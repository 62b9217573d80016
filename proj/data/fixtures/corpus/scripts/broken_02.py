import pandas as pd
name = '��'
