# rent listings notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/rent_listings.csv')
print(df['garage_cars'].value_counts())
print(df['heating'].describe())
print(df['neighborhood'].value_counts())
print(df.info())
print(df['lot_area'].describe())
sns.boxplot(x=df['monthly_rent'], y=df['bedrooms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print(df['year_built'].describe())
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
sns.boxplot(x=df['monthly_rent'], y=df['neighborhood'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['roof_style'].dropna(), kde=True)
plt.title('roof_style distribution')
plt.show()
print(df['year_built'].value_counts())
print(df.groupby('monthly_rent')['year_built'].agg(['mean', 'count']).head(10))
print(df['sqft'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['year_built'].dropna(), kde=True)
plt.title('year_built distribution')
plt.show()
df = df.drop_duplicates()
df['garage_cars'] = df['garage_cars'].fillna(df['garage_cars'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=22)
print(X_train.shape, X_test.shape)
model = RandomForestRegressor(n_estimators=300, random_state=0)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
