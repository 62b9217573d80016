# rent listings notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/rent_listings/' + 'data.csv'
df = pd.read_csv(path)
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
print(df['bedrooms'].describe())
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
sns.boxplot(x=df['monthly_rent'], y=df['garage_cars'])
plt.show()
print(df.groupby('monthly_rent')['neighborhood'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
print(df['year_built'].describe())
print('neighborhood unique:', df['neighborhood'].nunique(), 'missing:', df['neighborhood'].isnull().sum())
print(df['heating'].describe())
print(df.duplicated().sum())
print(df.shape)
print(df['year_built'].value_counts())
print(df.dtypes)
sns.boxplot(x=df['monthly_rent'], y=df['city'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['roof_style'].dropna(), kde=True)
plt.title('roof_style distribution')
plt.show()
print(df.groupby('monthly_rent')['city'].agg(['mean', 'count']).head(10))
print(df.groupby('monthly_rent')['sqft'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['bedrooms'].dropna(), kde=True)
plt.title('bedrooms distribution')
plt.show()
print(df['bathrooms'].value_counts())
sns.boxplot(x=df['monthly_rent'], y=df['heating'])
plt.show()
df = df.drop_duplicates()
df['bedrooms'] = df['bedrooms'].fillna(df['bedrooms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=1)
print(X_train.shape, X_test.shape)
model = XGBRegressor(n_estimators=500, learning_rate=0.03)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
