package surgery.model;

public class Privatepatient {
    private String firstName;

    public Privatepatient() {
        this.firstName = "unset";
    }

    public String getFirstName() {
        return formatName();
    }

    private String formatName() {
        return firstName;
    }
}
