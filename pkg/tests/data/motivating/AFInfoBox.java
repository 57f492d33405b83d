/** Route details are shown in this info box. */
public class AFInfoBox {
    private Icon assignRouteIcon;

    public void refresh() {
        Resource bundle = getAssignRouteResource();
        draw(bundle);
    }
}
