/** Halts every aircraft after an alarm. */
public class AFEmergencyComponent {
    private Button haltButton;
    private Alarm fleetAlarm;
    private Dialog warningDialog;
    private Panel sensorPanel;
    private Timer beaconTimer;
    private Overlay statusOverlay;

    public void haltAll() {
        siren.blink();
        beacon.notifyGround();
    }

    public void muteSiren() {
        siren.silence();
    }
}
