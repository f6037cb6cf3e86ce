import os
import sys

import numpy as np
import pandas as pd
import streamlit as st

# Make the eomlab package importable when run as `streamlit run src/dashboard/app.py`
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from eomlab.device import HotBathModel, OperatingPoint, assemble, reference_device  # noqa: E402
from eomlab.errors import TransducerError  # noqa: E402
from eomlab.metrics import eta_ext_at, evaluate_point  # noqa: E402
from eomlab.network import transfer_matrices  # noqa: E402

# --- CONFIG ---
SPAN_LINEWIDTHS = 5
GRID_POINTS = 301


# --- LOAD DEVICE ---
@st.cache_data()
def load_device(kappa_e_ext):
    """The reference device with an adjustable microwave external coupling."""
    return reference_device(kappa_e_ext=kappa_e_ext)


@st.cache_data()
def efficiency_spectrum(_device, op, device_key):
    """Conversion efficiency across the mechanical resonance, state-space and weak-coupling forms."""
    system, rates = assemble(_device, op)
    span = SPAN_LINEWIDTHS * rates.Gamma_tot
    f = np.linspace(_device.f_m - span, _device.f_m + span, GRID_POINTS)
    xi = transfer_matrices(system, f)[:, system.output_index('o_ext'), system.input_index('e_ext')]
    return pd.DataFrame({
        'detuning_kHz': (f - _device.f_m) / 1e3,
        'state space': np.abs(xi) ** 2,
        'weak coupling': eta_ext_at(rates, f),
    }).set_index('detuning_kHz')


# --- PAGE SETUP ---
st.set_page_config(
    page_title="eomlab | Operating Point",
    page_icon="🔬",
    layout="wide"
)

st.title("🔬 eomlab: Transducer Operating Point")
st.markdown("Set the bias, the pump and the bath occupancies to see efficiency, bandwidth and added noise. "
            "Use the sidebar to open the **Sweep Explorer** for the figure tables.")

# --- INPUT FORM ---
with st.form("operating_point"):
    col1, col2, col3 = st.columns(3)

    with col1:
        v_dc = st.slider("DC bias V_DC (V)", min_value=0.0, max_value=50.0, value=50.0, step=0.5)
        n_c = st.number_input("Intracavity photons n_c", min_value=0.0, value=3.5, step=0.5)
        kappa_e_ext = st.number_input("Microwave external coupling (MHz)", min_value=0.01, value=1.33, step=0.01,
                                      help="Sets eta_e together with the fixed internal loss.")

    with col2:
        n_f = st.number_input("Fridge phonon occupancy n_f", min_value=0.0, value=0.3, step=0.05)
        n_e_int = st.number_input("Microwave bath occupancy n_e,int", min_value=0.0, value=0.5, step=0.05)

    with col3:
        gamma_p = st.number_input("Hot-bath coupling Gamma_p (Hz)", min_value=0.0, value=300.0, step=10.0)
        n_p = st.number_input("Hot-bath occupancy n_p", min_value=0.0, value=20.0, step=1.0)

    st.form_submit_button("Evaluate")

# --- EVALUATION ---
device = load_device(kappa_e_ext * 1e6)
try:
    op = OperatingPoint(v_dc=v_dc, n_c=n_c, n_f=n_f, n_e_int=n_e_int,
                        hot_bath=HotBathModel.constant(gamma_p, n_p))
    report = evaluate_point(device, op)
except TransducerError as e:
    st.error(f"❌ {e.error_class}: {e}")
    st.stop()

st.header("Figures of Merit")
m1, m2, m3, m4 = st.columns(4)
m1.metric("Efficiency eta_ext", f"{report.eta_ext:.4f}")
m2.metric("Bandwidth", f"{report.bandwidth_hz / 1e3:,.1f} kHz")
m3.metric("Throughput", f"{report.throughput_hz:,.1f} Hz")
if report.n_add is None:
    m4.metric("Added noise n_add", "undefined", help="No electromechanical damping at V_DC = 0.")
else:
    m4.metric("Added noise n_add", f"{report.n_add:.3f}",
              delta="quantum-enabled" if report.n_add < 1 else "above one quantum",
              delta_color="normal" if report.n_add < 1 else "inverse")

o1, o2 = st.columns(2)
o1.metric("Mechanical occupancy n_m", f"{report.n_m:.3f}")
o2.metric("Microwave mode occupancy n_mw", f"{report.n_mw:.4f}")

st.subheader("Conversion Efficiency Spectrum")
if report.rates.Gamma_em > 0 and report.rates.Gamma_om > 0:
    st.line_chart(efficiency_spectrum(device, op, kappa_e_ext))
else:
    st.info("Conversion needs both a DC bias and an optical pump.")

st.subheader("Derived Rates")
st.dataframe(pd.DataFrame([report.to_record()]).T.rename(columns={0: 'value'}), use_container_width=True)
