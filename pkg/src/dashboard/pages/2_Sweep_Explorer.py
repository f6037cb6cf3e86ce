import glob
import os

import pandas as pd
import streamlit as st

# --- CONFIG ---
PROCESSED_DIR = os.path.join('data', 'processed')


# --- LOAD ALL TABLES (CACHE THEM) ---
@st.cache_data()
def load_tables():
    """Loads every table written by src/reproduce_figures.py, keyed by file name."""
    tables = {}
    for path in sorted(glob.glob(os.path.join(PROCESSED_DIR, '*.csv'))):
        try:
            print(f"Sweep_Explorer LOAD: Loading {path}...")
            tables[os.path.basename(path)] = pd.read_csv(path, float_precision='round_trip')
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            st.warning(f"Skipping {path}: {e}")
    return tables


# --- PAGE SETUP ---
st.set_page_config(
    page_title="eomlab | Sweep Explorer",
    page_icon="📈",
    layout="wide"
)

st.title("📈 Sweep Explorer")
st.markdown("Browse the figure tables. Run `python src/reproduce_figures.py` from the repository root first.")

tables = load_tables()

if not tables:
    st.error(f"No tables found in {PROCESSED_DIR}. Did you run 'src/reproduce_figures.py'?")
    st.stop()

# --- TABLE SELECTION ---
name = st.selectbox("Figure table", options=list(tables))
df = tables[name]

inputs = [c for c in df.columns if c.startswith('input.') or c == 'frequency_Hz']
numeric = [c for c in df.select_dtypes('number').columns if c not in inputs]

if inputs and numeric:
    col1, col2, col3 = st.columns(3)
    x = col1.selectbox("x axis", options=inputs)
    ys = col2.multiselect("y axis", options=numeric, default=numeric[:1])
    # second input axis of a grid sweep becomes one curve per value
    others = [c for c in inputs if c != x and df[c].nunique() > 1]
    group = col3.selectbox("one curve per", options=[None] + others)

    if ys:
        if group is None:
            chart = df.set_index(x)[ys]
        else:
            chart = df.pivot_table(index=x, columns=group, values=ys[0])
            chart.columns = [f"{group} = {v:g}" for v in chart.columns]
        st.line_chart(chart)

    # --- Highlights ---
    if 'metrics.n_add' in df.columns:
        quantum = df[df['metrics.n_add'] < 1]
        st.metric("Quantum-enabled points (n_add < 1)", f"{len(quantum)} of {len(df)}")

st.subheader("Full Table")
st.dataframe(df, use_container_width=True)
