# house prices notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
print(df.groupby('price')['city'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
print(df.describe().T)
print(df.columns.tolist())
print(df['bedrooms'].value_counts())
sns.boxplot(x=df['price'], y=df['bedrooms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['sqft'].dropna(), kde=True)
plt.title('sqft distribution')
plt.show()
print(df['city'].describe())
print(df.groupby('price')['roof_style'].agg(['mean', 'count']).head(10))
print(df.groupby('price')['lot_area'].agg(['mean', 'count']).head(10))
print(df['roof_style'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['roof_style'].dropna(), kde=True)
plt.title('roof_style distribution')
plt.show()
print(df['heating'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
print('lot_area unique:', df['lot_area'].nunique(), 'missing:', df['lot_area'].isnull().sum())
print('neighborhood unique:', df['neighborhood'].nunique(), 'missing:', df['neighborhood'].isnull().sum())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
df = df.drop_duplicates()
df['year_built'] = df['year_built'].fillna(df['year_built'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=47)
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
