# house prices notebook 9
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['bedrooms'].dropna(), kde=True)
plt.title('bedrooms distribution')
plt.show()
print(df['year_built'].describe())
print(df.groupby('price')['city'].agg(['mean', 'count']).head(10))
print(df['neighborhood'].value_counts())
sns.boxplot(x=df['price'], y=df['lot_area'])
plt.show()
sns.boxplot(x=df['price'], y=df['bathrooms'])
plt.show()
print('city unique:', df['city'].nunique(), 'missing:', df['city'].isnull().sum())
print(df['bedrooms'].value_counts())
print(df.groupby('price')['year_built'].agg(['mean', 'count']).head(10))
print(df.describe().T)
print(df['neighborhood'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
print(df.dtypes)
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print(df.columns.tolist())
sns.boxplot(x=df['price'], y=df['city'])
plt.show()
print(df['bathrooms'].value_counts())
print(df['roof_style'].value_counts())
print('roof_style unique:', df['roof_style'].nunique(), 'missing:', df['roof_style'].isnull().sum())
sns.boxplot(x=df['price'], y=df['garage_cars'])
plt.show()
print(df['heating'].describe())
print(df['roof_style'].describe())
print(df['lot_area'].describe())
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
print(df.groupby('price')['neighborhood'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['lot_area'] = df['lot_area'].fillna(df['lot_area'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=77)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = XGBRegressor(n_estimators=500, learning_rate=0.03)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with house_prices')
