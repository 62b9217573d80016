# rent listings notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import ElasticNet
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/rent_listings/' + 'data.csv'
df = pd.read_csv(path)
sns.boxplot(x=df['monthly_rent'], y=df['bedrooms'])
plt.show()
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print('neighborhood unique:', df['neighborhood'].nunique(), 'missing:', df['neighborhood'].isnull().sum())
print(df['bathrooms'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
print(df.groupby('monthly_rent')['city'].agg(['mean', 'count']).head(10))
print(df.groupby('monthly_rent')['sqft'].agg(['mean', 'count']).head(10))
print(df['garage_cars'].value_counts())
print(df['bedrooms'].value_counts())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['bedrooms'].describe())
print(df['heating'].describe())
print('bathrooms unique:', df['bathrooms'].nunique(), 'missing:', df['bathrooms'].isnull().sum())
print(df.head())
print(df.groupby('monthly_rent')['roof_style'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
print(df.info())
sns.boxplot(x=df['monthly_rent'], y=df['roof_style'])
plt.show()
df = df.drop_duplicates()
df['city'] = df['city'].fillna(df['city'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=24)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
model = ElasticNet(alpha=0.01, l1_ratio=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
