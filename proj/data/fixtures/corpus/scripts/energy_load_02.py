# energy load notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMRegressor
from sklearn.neighbors import KNeighborsRegressor
from sklearn.preprocessing import MinMaxScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/energy_load.csv')
print(df['pressure_hpa'].describe())
sns.boxplot(x=df['load_kw'], y=df['temperature_c'])
plt.show()
print(df.groupby('load_kw')['device_id'].agg(['mean', 'count']).head(10))
print(df.groupby('load_kw')['voltage'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
print(df.groupby('load_kw')['humidity_pct'].agg(['mean', 'count']).head(10))
print(df.info())
print(df.groupby('load_kw')['vibration_rms'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['pressure_hpa'].dropna(), kde=True)
plt.title('pressure_hpa distribution')
plt.show()
sns.boxplot(x=df['load_kw'], y=df['humidity_pct'])
plt.show()
print(df.dtypes)
print(df['timestamp'].describe())
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
print(df.groupby('load_kw')['timestamp'].agg(['mean', 'count']).head(10))
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
sns.boxplot(x=df['load_kw'], y=df['device_id'])
plt.show()
print(df.columns.tolist())
print(df['voltage'].value_counts())
print(df['timestamp'].value_counts())
print(df['pressure_hpa'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['timestamp'])
plt.show()
print(df['vibration_rms'].describe())
sns.boxplot(x=df['load_kw'], y=df['status'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
df = df.drop_duplicates()
df['humidity_pct'] = df['humidity_pct'].fillna(df['humidity_pct'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=8)
print(X_train.shape, X_test.shape)
model = LGBMRegressor(num_leaves=63)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
minmax_b0 = MinMaxScaler()
X_train_b = minmax_b0.fit_transform(X_train)
X_test_b = minmax_b0.transform(X_test)
model_b = KNeighborsRegressor(n_neighbors=5)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('rmse', np.sqrt(mean_squared_error(y_test, pred_b)))
print('r2', r2_score(y_test, pred_b))
plt.scatter(y_test, pred_b, alpha=0.4)
plt.show()
print('done with energy_load')
