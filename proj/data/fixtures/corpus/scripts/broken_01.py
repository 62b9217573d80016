import pandas as pd
df = pd.read_csv('../input/heart.csv)
print(df.head())
