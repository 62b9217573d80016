# house prices notebook 3
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
sns.boxplot(x=df['price'], y=df['city'])
plt.show()
sns.boxplot(x=df['price'], y=df['lot_area'])
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
print('city unique:', df['city'].nunique(), 'missing:', df['city'].isnull().sum())
print(df['city'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['year_built'].dropna(), kde=True)
plt.title('year_built distribution')
plt.show()
sns.boxplot(x=df['price'], y=df['sqft'])
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df.groupby('price')['sqft'].agg(['mean', 'count']).head(10))
print(df['bedrooms'].describe())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
sns.boxplot(x=df['price'], y=df['year_built'])
plt.show()
sns.boxplot(x=df['price'], y=df['roof_style'])
plt.show()
print(df.groupby('price')['roof_style'].agg(['mean', 'count']).head(10))
print('roof_style unique:', df['roof_style'].nunique(), 'missing:', df['roof_style'].isnull().sum())
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
print(df.head())
plt.figure(figsize=(8, 4))
sns.histplot(df['garage_cars'].dropna(), kde=True)
plt.title('garage_cars distribution')
plt.show()
df = df.drop_duplicates()
df['bedrooms'] = df['bedrooms'].fillna(df['bedrooms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=98)
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
